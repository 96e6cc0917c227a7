#include <paraf/framework.hpp>

#include <algorithm>
#include <atomic>
#include <set>
#include <unordered_map>

namespace paraf {

namespace {

std::uint64_t next_framework_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

} // namespace

bool is_valid_name(std::string_view name) {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

// ---------------------------------------------------------------------------
// ArgSet

std::vector<std::size_t> ArgSet::indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (Mask rest = bits_; rest != 0; rest &= rest - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return out;
}

void ArgSet::check_same(const ArgSet& other) const {
    if (framework_ != other.framework_) {
        throw BindingError("argument sets are bound to different frameworks");
    }
}

bool ArgSet::subset_of(const ArgSet& other) const {
    check_same(other);
    return (bits_ & ~other.bits_) == 0;
}

bool ArgSet::strict_subset_of(const ArgSet& other) const { return subset_of(other) && bits_ != other.bits_; }

bool ArgSet::intersects(const ArgSet& other) const {
    check_same(other);
    return (bits_ & other.bits_) != 0;
}

ArgSet ArgSet::operator|(const ArgSet& other) const {
    check_same(other);
    return {framework_, bits_ | other.bits_};
}

ArgSet ArgSet::operator&(const ArgSet& other) const {
    check_same(other);
    return {framework_, bits_ & other.bits_};
}

ArgSet ArgSet::operator-(const ArgSet& other) const {
    check_same(other);
    return {framework_, bits_ & ~other.bits_};
}

bool ArgSet::operator==(const ArgSet& other) const {
    check_same(other);
    return bits_ == other.bits_;
}

bool ArgSet::operator<(const ArgSet& other) const {
    check_same(other);
    return bits_ < other.bits_;
}

// ---------------------------------------------------------------------------
// validate

std::vector<Defect> validate(const RawFramework& raw) {
    std::vector<Defect> defects;
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& name : raw.args) {
        if (!is_valid_name(name)) {
            defects.push_back({Defect::Kind::InvalidName, "invalid argument name '" + name + "'"});
        }
        if (!seen.emplace(name, seen.size()).second) {
            defects.push_back({Defect::Kind::DuplicateArgument, "duplicate argument '" + name + "'"});
        }
    }
    if (seen.size() > Framework::kMaxArguments) {
        defects.push_back({Defect::Kind::TooLarge, "framework has " + std::to_string(seen.size()) +
                                                       " arguments; at most " +
                                                       std::to_string(Framework::kMaxArguments) + " are supported"});
    }
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& [from, to] : raw.attacks) {
        bool known = true;
        for (const auto* endpoint : {&from, &to}) {
            if (!seen.contains(*endpoint)) {
                defects.push_back({Defect::Kind::UnknownArgument, "unknown argument '" + *endpoint +
                                                                      "' in attack (" + from + "," + to + ")"});
                known = false;
            }
        }
        if (known && !pairs.emplace(from, to).second) {
            defects.push_back({Defect::Kind::DuplicateAttack, "duplicate attack (" + from + "," + to + ")"});
        }
    }
    return defects;
}

// ---------------------------------------------------------------------------
// Framework

Framework::Framework() : id_(next_framework_id()) {}

Framework::Framework(const RawFramework& raw) : id_(next_framework_id()) {
    for (const auto& defect : validate(raw)) {
        if (defect.kind == Defect::Kind::TooLarge) throw SizeError(defect.message);
        if (defect.kind != Defect::Kind::DuplicateAttack) throw InputError(defect.message);
    }
    names_ = raw.args;
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < names_.size(); ++i) index.emplace(names_[i], i);
    std::vector<std::pair<std::size_t, std::size_t>> attacks;
    attacks.reserve(raw.attacks.size());
    for (const auto& [from, to] : raw.attacks) attacks.emplace_back(index.at(from), index.at(to));
    build(std::move(attacks));
}

Framework::Framework(std::vector<std::string> names, std::vector<std::pair<std::size_t, std::size_t>> attacks)
    : id_(next_framework_id()), names_(std::move(names)) {
    RawFramework probe{names_, {}};
    for (const auto& defect : validate(probe)) {
        if (defect.kind == Defect::Kind::TooLarge) throw SizeError(defect.message);
        throw InputError(defect.message);
    }
    for (const auto& [from, to] : attacks) {
        if (from >= names_.size() || to >= names_.size()) {
            throw InputError("attack endpoint index out of range");
        }
    }
    build(std::move(attacks));
}

void Framework::build(std::vector<std::pair<std::size_t, std::size_t>> attacks) {
    std::sort(attacks.begin(), attacks.end());
    attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());
    attacks_ = std::move(attacks);
    out_.assign(names_.size(), 0);
    in_.assign(names_.size(), 0);
    for (const auto& [from, to] : attacks_) {
        out_[from] |= Mask{1} << to;
        in_[to] |= Mask{1} << from;
    }
    by_name_.resize(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) by_name_[i] = i;
    std::sort(by_name_.begin(), by_name_.end(), [this](std::size_t a, std::size_t b) { return names_[a] < names_[b]; });
}

std::optional<std::size_t> Framework::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

std::size_t Framework::index(std::string_view name) const {
    if (auto found = find(name)) return *found;
    throw InputError("unknown argument '" + std::string(name) + "'");
}

Mask Framework::all_mask() const noexcept {
    return names_.size() >= 64 ? ~Mask{0} : (Mask{1} << names_.size()) - 1;
}

ArgSet Framework::make(Mask bits) const {
    if ((bits & ~all_mask()) != 0) throw BindingError("argument set exceeds the framework's index range");
    return ArgSet(id_, bits);
}

ArgSet Framework::make(std::initializer_list<std::string_view> names) const {
    Mask bits = 0;
    for (auto name : names) bits |= Mask{1} << index(name);
    return ArgSet(id_, bits);
}

ArgSet Framework::make(const std::vector<std::string>& names) const {
    Mask bits = 0;
    for (const auto& name : names) bits |= Mask{1} << index(name);
    return ArgSet(id_, bits);
}

void Framework::check(const ArgSet& set) const {
    if (set.framework_id() != id_) throw BindingError("argument set is bound to a different framework");
}

std::vector<std::string> Framework::member_names(const ArgSet& set) const {
    check(set);
    std::vector<std::string> out;
    out.reserve(set.size());
    for (auto i : by_name_) {
        if (set.contains(i)) out.push_back(names_[i]);
    }
    return out;
}

std::string Framework::format(const ArgSet& set) const {
    std::string out = "[";
    bool first = true;
    for (const auto& name : member_names(set)) {
        if (!first) out += ',';
        out += name;
        first = false;
    }
    out += ']';
    return out;
}

bool Framework::canonical_less(const ArgSet& lhs, const ArgSet& rhs) const {
    check(lhs);
    check(rhs);
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    // Walk members in name order; the first position where the sequences
    // differ holds the smaller name in whichever set owns it.
    std::size_t li = 0;
    std::size_t ri = 0;
    while (true) {
        while (li < by_name_.size() && !lhs.contains(by_name_[li])) ++li;
        while (ri < by_name_.size() && !rhs.contains(by_name_[ri])) ++ri;
        if (li == by_name_.size() || ri == by_name_.size()) return false;
        if (li != ri) return li < ri;
        ++li;
        ++ri;
    }
}

RawFramework Framework::raw() const {
    RawFramework raw{names_, {}};
    raw.attacks.reserve(attacks_.size());
    for (const auto& [from, to] : attacks_) raw.attacks.emplace_back(names_[from], names_[to]);
    return raw;
}

bool Framework::same_graph(const Framework& other) const {
    auto lhs = raw();
    auto rhs = other.raw();
    std::set<std::string> lhs_args(lhs.args.begin(), lhs.args.end());
    std::set<std::string> rhs_args(rhs.args.begin(), rhs.args.end());
    std::set<std::pair<std::string, std::string>> lhs_att(lhs.attacks.begin(), lhs.attacks.end());
    std::set<std::pair<std::string, std::string>> rhs_att(rhs.attacks.begin(), rhs.attacks.end());
    return lhs_args == rhs_args && lhs_att == rhs_att;
}

// ---------------------------------------------------------------------------
// Set operations

ArgSet attacked_set(const Framework& f, const ArgSet& set) {
    f.check(set);
    return f.make(attacked_mask(f, set.bits()));
}

bool is_conflict_free(const Framework& f, const ArgSet& set) {
    f.check(set);
    return conflict_free_mask(f, set.bits());
}

ArgSet range(const Framework& f, const ArgSet& set) {
    f.check(set);
    return f.make(set.bits() | attacked_mask(f, set.bits()));
}

} // namespace paraf
