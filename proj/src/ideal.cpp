#include "hsilab/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsilab {

Monomial Monomial::from_support(std::initializer_list<int> indices) {
    return from_support(std::span<const int>(indices.begin(), indices.size()));
}

Monomial Monomial::from_support(std::span<const int> indices) { return Monomial(make_set(indices)); }

int Monomial::min_index() const {
    if (bits_ == 0)
        throw std::logic_error("min of the unit monomial");
    return std::countr_zero(bits_) + 1;
}

int Monomial::max_index() const {
    if (bits_ == 0)
        throw std::logic_error("max of the unit monomial");
    return 64 - std::countl_zero(bits_);
}

int Monomial::second_max() const {
    if (degree() < 2)
        throw std::logic_error("secondmax needs a support of size at least 2");
    return Monomial(bits_ & ~vertex_bit(max_index())).max_index();
}

Monomial Monomial::exchange(int remove, int add) const {
    return Monomial((bits_ & ~vertex_bit(remove)) | vertex_bit(add));
}

VariableOrder::VariableOrder(std::vector<int> order) : order_(std::move(order)) {
    const int n = static_cast<int>(order_.size());
    rank_.assign(static_cast<std::size_t>(n), -1);
    for (int pos = 0; pos < n; ++pos) {
        const int v = order_[static_cast<std::size_t>(pos)];
        if (v < 1 || v > n || rank_[static_cast<std::size_t>(v - 1)] != -1)
            throw std::invalid_argument("variable order must be a permutation of [n]");
        rank_[static_cast<std::size_t>(v - 1)] = pos;
    }
}

VariableOrder VariableOrder::natural(int n) { return VariableOrder(VertexOrdering::natural(n).order); }

VariableOrder VariableOrder::reversed() const { return VariableOrder(std::vector<int>(order_.rbegin(), order_.rend())); }

bool lex_greater(Monomial u, Monomial v, const VariableOrder& o) {
    const VertexSet diff = u.bits() ^ v.bits();
    if (diff == 0)
        return false;
    int top = -1;
    int best_rank = o.size();
    for (int i : set_members(diff))
        if (o.rank(i) < best_rank) {
            best_rank = o.rank(i);
            top = i;
        }
    return u.contains(top);
}

EquigeneratedIdeal::EquigeneratedIdeal(int n_vars, int degree, std::vector<Monomial> gens)
    : n_vars_(n_vars), degree_(degree), gens_(std::move(gens)) {
    if (n_vars < 0 || n_vars > kMaxVertices)
        throw std::invalid_argument("number of variables must lie in [0, 64]");
    if (degree < 1)
        throw std::invalid_argument("generating degree must be at least 1");
    for (Monomial m : gens_) {
        if (m.degree() != degree)
            throw std::invalid_argument("generator of degree " + std::to_string(m.degree()) +
                                        " in an ideal generated in degree " + std::to_string(degree));
        if ((m.bits() & ~full_set(n_vars)) != 0)
            throw std::invalid_argument("generator uses a variable beyond x_" + std::to_string(n_vars));
    }
    std::sort(gens_.begin(), gens_.end(), [](Monomial a, Monomial b) { return lex_greater(a, b); });
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

bool EquigeneratedIdeal::is_generator(Monomial m) const {
    return std::binary_search(gens_.begin(), gens_.end(), m, [](Monomial a, Monomial b) { return lex_greater(a, b); });
}

bool EquigeneratedIdeal::contains(Monomial m) const {
    return std::any_of(gens_.begin(), gens_.end(), [m](Monomial g) { return g.divides(m); });
}

EquigeneratedIdeal edge_ideal(const SimpleGraph& g) {
    std::vector<Monomial> gens;
    for (auto [u, v] : g.edges())
        gens.push_back(Monomial::from_support({u, v}));
    return EquigeneratedIdeal(g.vertex_count(), 2, std::move(gens));
}

EquigeneratedIdeal restrict_to(const EquigeneratedIdeal& ideal, Monomial m) {
    std::vector<Monomial> kept;
    for (Monomial g : ideal.generators())
        if (g.divides(m))
            kept.push_back(g);
    return EquigeneratedIdeal(ideal.n_vars(), ideal.degree(), std::move(kept));
}

bool colon_is_variable_generated(std::span<const Monomial> prefix, Monomial m) {
    // Variables x with x*m in (prefix): the single-variable differences q \ m.
    VertexSet linear = 0;
    for (Monomial q : prefix) {
        const VertexSet diff = q.bits() & ~m.bits();
        if (set_size(diff) == 1)
            linear |= diff;
    }
    return std::all_of(prefix.begin(), prefix.end(),
                       [&](Monomial p) { return (p.bits() & ~m.bits() & linear) != 0; });
}

bool two_generator_linear_resolution(Monomial a, Monomial b) {
    return set_size(a.bits() & ~b.bits()) == 1;
}

void to_json(nlohmann::json& j, const EquigeneratedIdeal& ideal) {
    j = nlohmann::json{{"n", ideal.n_vars()}, {"degree", ideal.degree()}, {"gens", supports_json(ideal.generators())}};
}

void from_json(const nlohmann::json& j, EquigeneratedIdeal& ideal) {
    std::vector<Monomial> gens;
    for (const auto& support : j.at("gens"))
        gens.push_back(Monomial::from_support(support.get<std::vector<int>>()));
    ideal = EquigeneratedIdeal(j.at("n").get<int>(), j.at("degree").get<int>(), std::move(gens));
}

nlohmann::json supports_json(std::span<const Monomial> gens) {
    auto out = nlohmann::json::array();
    for (Monomial m : gens)
        out.push_back(m.support());
    return out;
}

} // namespace hsilab
