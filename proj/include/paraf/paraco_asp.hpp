#pragma once

#include <paraf/framework.hpp>
#include <paraf/program.hpp>
#include <paraf/semantics.hpp>

#include <set>
#include <vector>

namespace paraf {

/// One normal rule per argument: head a, negative body = a's attackers in
/// argument order. Unattacked arguments become facts.
Program af_to_program(const Framework& f);

/// Whether every rule is normal with one head atom, an empty positive body,
/// only Plain atoms, and no head atom is defined twice.
bool is_af_shaped(const Program& program);

/// Epistemic κ-transformation. Rules with an empty negative body are kept;
/// every other rule r (1-based position) becomes
///   λ_{r,1} ∨ … ∨ λ_{r,l} ∨ Kc₁ ∨ … ∨ Kc_n ← b₁, …, b_m
///   a_i ← λ_{r,i}
///   ← λ_{r,i}, c_j
///   λ_{r,i} ← a_i, λ_{r,k}   (i ≠ k; the i = k instance is a tautology)
/// PreconditionError if the input holds non-Plain atoms.
Program kappa_transform(const Program& program);

/// κ-transformation for AF-shaped programs, with the λ atom folded into
/// the head: a ∨ Kc₁ ∨ … ∨ Kc_n and ← a, c_j.
Program kappa_simplified(const Program& program);

/// κ-transformation plus Ka ← a for every Plain atom a, plus the
/// belief-level copy Ka₁ ∨ … ∨ Kc_n ← Kb₁, …, Kb_m of every rule.
Program ht_transform(const Program& program);

/// {Ka ∈ I | a ∉ I}.
std::set<Atom> gap(const Interpretation& interpretation);

/// Interpretations with no peer whose gap is a strict subset of theirs.
std::vector<Interpretation> maximal_canonical(const std::vector<Interpretation>& models);

/// mc(AS(P)) restricted to Plain and Belief atoms, for an already
/// transformed program.
std::vector<Interpretation> paracoherent_models(const Program& transformed);

/// Semi-stable models: mc(AS(κ(P))) restricted to Plain and Belief atoms.
std::vector<Interpretation> sst_models(const Program& program);
/// Semi-equilibrium models: mc(AS(HT(P))) restricted to Plain and Belief atoms.
std::vector<Interpretation> seq_models(const Program& program);

/// Drops every non-Plain atom and deduplicates.
std::vector<Interpretation> projected_models(const std::vector<Interpretation>& models);

/// Plain atoms plus the gap of each model, i.e. without Ka for true a.
/// The usual way paracoherent answer sets are written down.
std::vector<Interpretation> compact_models(const std::vector<Interpretation>& models);

/// Reads the Plain part of each model as an extension of `f`. InputError
/// when a Plain atom names no argument.
ExtensionSet extensions_from_models(const Framework& f, const std::vector<Interpretation>& models);

/// Externally supported rewriting of an AF-shaped program: every rule
/// a ← not c₁, …, not c_n gains not s__c_j for each j, and every negated
/// atom c gets the choice pair s__c ← not n__c and n__c ← not s__c.
Program externally_supported_program(const Program& program);

/// Answer sets of the externally supported program whose Shadow atoms are
/// ⊆-minimal, restricted to Plain and Shadow atoms.
std::vector<Interpretation> mes_models(const Program& program);

} // namespace paraf
