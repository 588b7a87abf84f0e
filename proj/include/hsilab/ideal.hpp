#pragma once

#include "hsilab/graph.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <vector>

namespace hsilab {

/// Squarefree monomial identified with its support (bit i-1 <=> x_i divides it).
class Monomial {
public:
    constexpr Monomial() = default;
    constexpr explicit Monomial(VertexSet support) : bits_(support) {}
    static Monomial from_support(std::initializer_list<int> indices);
    static Monomial from_support(std::span<const int> indices);
    /// Product of all variables x_1..x_n.
    static Monomial product_of_first(int n) { return Monomial(full_set(n)); }

    [[nodiscard]] constexpr VertexSet bits() const noexcept { return bits_; }
    [[nodiscard]] constexpr int degree() const noexcept { return set_size(bits_); }
    [[nodiscard]] std::vector<int> support() const { return set_members(bits_); }
    [[nodiscard]] constexpr bool contains(int i) const noexcept { return (bits_ & vertex_bit(i)) != 0; }
    [[nodiscard]] constexpr bool divides(Monomial other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    [[nodiscard]] int min_index() const;
    [[nodiscard]] int max_index() const;
    /// Second largest index of the support; requires degree >= 2.
    [[nodiscard]] int second_max() const;

    /// x_add * this / x_remove.
    [[nodiscard]] Monomial exchange(int remove, int add) const;
    [[nodiscard]] Monomial without(VertexSet s) const { return Monomial(bits_ & ~s); }

    friend constexpr bool operator==(Monomial, Monomial) = default;

private:
    VertexSet bits_ = 0;
};

/// A permutation of [n] read as x_{order[0]} > x_{order[1]} > ...
class VariableOrder {
public:
    explicit VariableOrder(std::vector<int> order);
    static VariableOrder natural(int n);
    static VariableOrder from_vertex_ordering(const VertexOrdering& o) { return VariableOrder(o.order); }

    [[nodiscard]] int size() const noexcept { return static_cast<int>(order_.size()); }
    [[nodiscard]] const std::vector<int>& order() const noexcept { return order_; }
    /// Position of x_i in the order; smaller rank means larger variable.
    [[nodiscard]] int rank(int i) const { return rank_[static_cast<std::size_t>(i - 1)]; }
    [[nodiscard]] VariableOrder reversed() const;

private:
    std::vector<int> order_;
    std::vector<int> rank_;
};

/// u >_lex v for equal-degree squarefree monomials under the natural order x_1 > x_2 > ...
[[nodiscard]] constexpr bool lex_greater(Monomial u, Monomial v) {
    const VertexSet diff = u.bits() ^ v.bits();
    return diff != 0 && (u.bits() & (diff & (~diff + 1))) != 0;
}
[[nodiscard]] bool lex_greater(Monomial u, Monomial v, const VariableOrder& o);

/// Minimal generators of a squarefree monomial ideal generated in a single degree.
/// Generators are kept sorted lex-descending under the natural order; the zero ideal has none.
class EquigeneratedIdeal {
public:
    EquigeneratedIdeal(int n_vars, int degree, std::vector<Monomial> gens = {});
    static EquigeneratedIdeal zero(int n_vars, int degree) { return EquigeneratedIdeal(n_vars, degree); }

    [[nodiscard]] int n_vars() const noexcept { return n_vars_; }
    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] const std::vector<Monomial>& generators() const noexcept { return gens_; }
    [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return gens_.empty(); }

    [[nodiscard]] bool is_generator(Monomial m) const;
    /// Ideal membership of an arbitrary squarefree monomial.
    [[nodiscard]] bool contains(Monomial m) const;

    friend bool operator==(const EquigeneratedIdeal&, const EquigeneratedIdeal&) = default;

private:
    int n_vars_;
    int degree_;
    std::vector<Monomial> gens_;
};

[[nodiscard]] EquigeneratedIdeal edge_ideal(const SimpleGraph& g);

/// I^{<=m}: the generators dividing m.
[[nodiscard]] EquigeneratedIdeal restrict_to(const EquigeneratedIdeal& ideal, Monomial m);

/// Whether (prefix) : m is generated by variables.
[[nodiscard]] bool colon_is_variable_generated(std::span<const Monomial> prefix, Monomial m);

/// Whether (a, b) has a linear resolution, i.e. the two generators differ in a single variable.
[[nodiscard]] bool two_generator_linear_resolution(Monomial a, Monomial b);

void to_json(nlohmann::json& j, const EquigeneratedIdeal& ideal);
void from_json(const nlohmann::json& j, EquigeneratedIdeal& ideal);
[[nodiscard]] nlohmann::json supports_json(std::span<const Monomial> gens);

} // namespace hsilab
