#pragma once

#include "hsilab/ideal.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hsilab {

/// Lex criterion: for all generators g >_lex f there are i in supp(f), j in supp(g)\supp(f) with
/// j before i in `o` and x_j f / x_i a minimal generator. Equivalent to linear quotients in the
/// lex order induced by `o`.
[[nodiscard]] bool lex_quotients_check(const EquigeneratedIdeal& ideal, const VariableOrder& o);

/// Generators sorted lex-descending under `o`.
[[nodiscard]] std::vector<Monomial> lex_sorted(const EquigeneratedIdeal& ideal, const VariableOrder& o);

/// Whether every prefix of `order` passes the variable-generated colon test.
[[nodiscard]] bool is_linear_quotient_order(std::span<const Monomial> order);

/// Necessary condition: for every pair of generators f, g the generators dividing lcm(f, g) form a
/// connected graph under "differ in one variable". Returns a violating pair when it fails.
[[nodiscard]] std::optional<std::pair<Monomial, Monomial>> restriction_disconnection(const EquigeneratedIdeal& ideal);

enum class LqDecision { yes, no, undecided };
enum class LqMethod { lex, search };

struct LqVerdict {
    LqDecision decision = LqDecision::undecided;
    LqMethod method = LqMethod::search;
    std::optional<std::vector<Monomial>> witness;
    std::string reason;

    [[nodiscard]] bool has_lq() const noexcept { return decision == LqDecision::yes; }
    [[nodiscard]] bool decided() const noexcept { return decision != LqDecision::undecided; }
};

struct LqOptions {
    /// Variable order for the lex fast path; natural order when absent. Its reverse is tried too.
    std::optional<VariableOrder> order;
    std::size_t max_generators = 64;
    /// Maximum search nodes; 0 means unlimited.
    std::uint64_t node_budget = 0;
};

[[nodiscard]] LqVerdict has_linear_quotients(const EquigeneratedIdeal& ideal, const LqOptions& options = {});

[[nodiscard]] std::string to_string(LqMethod m);
void to_json(nlohmann::json& j, const LqVerdict& v);

} // namespace hsilab
