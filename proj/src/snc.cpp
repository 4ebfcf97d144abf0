#include "cdesc/snc.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cdesc/error.hpp"

namespace cdesc {

Subset parse_subset(std::string_view text) {
    Subset out;
    std::string token;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, token, ',')) {
        token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
        if (token.empty()) throw ParseError("empty entry in subset '" + std::string(text) + "'");
        if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("subset '" + std::string(text) + "' must list positive integers");
        out.push_back(std::stoi(token));
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1]) throw ParseError("subset '" + std::string(text) + "' must be strictly increasing");
    if (!out.empty() && out.front() < 1) throw ParseError("subset indices are 1-based");
    return out;
}

std::string subset_key(const Subset& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out;
}

std::vector<Subset> subsets_of_size(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    Subset current(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) current[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(current);
        int i = k - 1;
        while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++current[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

SNCPair::SNCPair(const AtomRegistry& registry, std::string ambient, std::vector<std::string> components,
                 std::map<Subset, std::string> strata)
    : ambient_(std::move(ambient)), components_(std::move(components)), declared_(std::move(strata)) {
    dim_ = registry.at(ambient_).dim;
    const int r = rank();
    std::set<std::string> labels(components_.begin(), components_.end());
    if (labels.size() != components_.size()) throw InvariantViolation("snc-component", "component labels must be distinct");
    for (const auto& [sigma, atom] : declared_) {
        if (sigma.empty()) throw InvariantViolation("snc-monotone", "the empty stratum is the ambient and is implicit");
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            if (sigma[i] < 1 || sigma[i] > r)
                throw InvariantViolation("snc-component", "stratum {" + subset_key(sigma) + "} names a missing component");
            if (i > 0 && sigma[i] <= sigma[i - 1])
                throw InvariantViolation("snc-component", "stratum indices must be strictly increasing");
        }
        const int expected = dim_ - static_cast<int>(sigma.size());
        if (registry.at(atom).dim != expected)
            throw InvariantViolation("snc-codimension", "stratum {" + subset_key(sigma) + "} = " + atom + " has dimension " +
                                                            std::to_string(registry.at(atom).dim) + ", expected " +
                                                            std::to_string(expected));
        for (std::size_t l = 0; l < sigma.size() && sigma.size() > 1; ++l) {
            Subset face = sigma;
            face.erase(face.begin() + static_cast<long>(l));
            if (declared_.count(face) == 0)
                throw InvariantViolation("snc-monotone", "stratum {" + subset_key(sigma) + "} is nonempty but {" +
                                                             subset_key(face) + "} is not declared");
        }
    }
    for (int a = 1; a <= r; ++a)
        if (declared_.count(Subset{a}) == 0)
            throw InvariantViolation("snc-component", "component " + components_[static_cast<std::size_t>(a - 1)] +
                                                          " has no atom (stratum {" + std::to_string(a) + "})");

    strata_.push_back({{}, ambient_, dim_});
    std::vector<Stratum> rest;
    for (const auto& [sigma, atom] : declared_) rest.push_back({sigma, atom, registry.at(atom).dim});
    std::stable_sort(rest.begin(), rest.end(), [](const Stratum& a, const Stratum& b) {
        if (a.sigma.size() != b.sigma.size()) return a.sigma.size() < b.sigma.size();
        return a.sigma < b.sigma;
    });
    strata_.insert(strata_.end(), rest.begin(), rest.end());
}

std::optional<std::string> SNCPair::stratum(const Subset& sigma) const {
    if (sigma.empty()) return ambient_;
    auto it = declared_.find(sigma);
    if (it == declared_.end()) return std::nullopt;
    return it->second;
}

std::vector<Stratum> strata_lattice(const SNCPair& pair) { return pair.strata(); }

int gysin_sign(const Subset& sigma, int removed) {
    auto it = std::find(sigma.begin(), sigma.end(), removed);
    if (it == sigma.end()) throw InvalidMapError("gysin_sign: index not in subset");
    const long l = (it - sigma.begin()) + 1;
    return (l + 1) % 2 == 0 ? 1 : -1;
}

MotiveClass chi_c_open(const SNCPair& pair) {
    MotiveClass out;
    for (const auto& s : pair.strata())
        out += MotiveClass::term(s.atom, 0, s.sigma.size() % 2 == 0 ? 1 : -1);
    return out;
}

MotiveClass chi_open(const SNCPair& pair) {
    MotiveClass out;
    for (const auto& s : pair.strata())
        out += MotiveClass::term(s.atom, static_cast<int>(s.sigma.size()), s.sigma.size() % 2 == 0 ? 1 : -1);
    return out;
}

GysinComplex::GysinComplex(const SNCPair& pair) {
    for (const auto& s : pair.strata()) {
        const std::size_t p = s.sigma.size();
        if (terms_.size() <= p) terms_.resize(p + 1);
        terms_[p].push_back({s.sigma, s.atom, static_cast<int>(p)});
    }
    for (std::size_t p = 0; p + 1 < terms_.size(); ++p) {
        std::vector<GysinEntry> gamma;
        for (const auto& t : terms_[p + 1])
            for (int removed : t.sigma) {
                Subset face = t.sigma;
                face.erase(std::find(face.begin(), face.end(), removed));
                gamma.push_back({t.sigma, face, gysin_sign(t.sigma, removed)});
            }
        differential_.push_back(std::move(gamma));
    }
}

MotiveClass GysinComplex::euler_class() const {
    MotiveClass out;
    for (std::size_t p = 0; p < terms_.size(); ++p)
        for (const auto& t : terms_[p]) out += MotiveClass::term(t.atom, t.twist, p % 2 == 0 ? 1 : -1);
    return out;
}

std::size_t GysinComplex::gamma_squared_defects() const {
    std::size_t defects = 0;
    for (std::size_t p = 0; p + 1 < differential_.size(); ++p) {
        std::map<std::pair<Subset, Subset>, long> composite;
        for (const auto& outer : differential_[p + 1])
            for (const auto& inner : differential_[p])
                if (inner.from == outer.to) composite[{outer.from, inner.to}] += outer.sign * inner.sign;
        for (const auto& entry : composite)
            if (entry.second != 0) ++defects;
    }
    return defects;
}

}  // namespace cdesc
