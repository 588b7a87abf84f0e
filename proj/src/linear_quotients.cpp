#include "hsilab/linear_quotients.hpp"

#include <algorithm>
#include <set>

namespace hsilab {
namespace {

LqVerdict lex_yes(std::vector<Monomial> order) {
    return {LqDecision::yes, LqMethod::lex, std::move(order), {}};
}

class OrderSearch {
public:
    OrderSearch(std::vector<Monomial> gens, std::uint64_t budget)
        : gens_(std::move(gens)), budget_(budget), chosen_((gens_.size() + 63) / 64, 0) {}

    // nullopt when the node budget ran out.
    std::optional<bool> run() {
        const bool found = extend();
        if (exhausted_)
            return std::nullopt;
        return found;
    }

    [[nodiscard]] const std::vector<Monomial>& order() const { return order_; }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    bool extend() {
        if (order_.size() == gens_.size())
            return true;
        if (failed_.count(chosen_) != 0)
            return false;
        if (budget_ != 0 && nodes_ >= budget_) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (is_chosen(i) || !colon_is_variable_generated(order_, gens_[i]))
                continue;
            toggle(i);
            order_.push_back(gens_[i]);
            if (extend())
                return true;
            order_.pop_back();
            toggle(i);
            if (exhausted_)
                return false;
        }
        failed_.insert(chosen_);
        return false;
    }

    [[nodiscard]] bool is_chosen(std::size_t i) const { return ((chosen_[i / 64] >> (i % 64)) & 1U) != 0; }
    void toggle(std::size_t i) { chosen_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    std::vector<Monomial> gens_;
    std::uint64_t budget_;
    std::vector<std::uint64_t> chosen_;
    std::vector<Monomial> order_;
    std::set<std::vector<std::uint64_t>> failed_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace

std::vector<Monomial> lex_sorted(const EquigeneratedIdeal& ideal, const VariableOrder& o) {
    std::vector<Monomial> out = ideal.generators();
    std::sort(out.begin(), out.end(), [&](Monomial a, Monomial b) { return lex_greater(a, b, o); });
    return out;
}

bool lex_quotients_check(const EquigeneratedIdeal& ideal, const VariableOrder& o) {
    const auto sorted = lex_sorted(ideal, o);
    const VertexSet all = full_set(ideal.n_vars());
    for (std::size_t fi = 1; fi < sorted.size(); ++fi) {
        const Monomial f = sorted[fi];
        // Variables j outside f that replace some later variable i of f inside the ideal.
        VertexSet exchangeable = 0;
        for (int i : f.support())
            for (int j : set_members(all & ~f.bits()))
                if (o.rank(j) < o.rank(i) && ideal.is_generator(f.exchange(i, j)))
                    exchangeable |= vertex_bit(j);
        for (std::size_t gi = 0; gi < fi; ++gi)
            if ((sorted[gi].bits() & ~f.bits() & exchangeable) == 0)
                return false;
    }
    return true;
}

bool is_linear_quotient_order(std::span<const Monomial> order) {
    for (std::size_t i = 1; i < order.size(); ++i)
        if (!colon_is_variable_generated(order.first(i), order[i]))
            return false;
    return true;
}

std::optional<std::pair<Monomial, Monomial>> restriction_disconnection(const EquigeneratedIdeal& ideal) {
    const auto& gens = ideal.generators();
    std::set<VertexSet> seen;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            const VertexSet lcm = gens[a].bits() | gens[b].bits();
            if (set_size(lcm) <= ideal.degree() + 1 || !seen.insert(lcm).second)
                continue;
            std::vector<Monomial> local;
            for (Monomial g : gens)
                if ((g.bits() & ~lcm) == 0)
                    local.push_back(g);
            std::vector<bool> reached(local.size(), false);
            std::vector<std::size_t> stack{0};
            reached[0] = true;
            std::size_t count = 1;
            while (!stack.empty()) {
                const Monomial cur = local[stack.back()];
                stack.pop_back();
                for (std::size_t i = 0; i < local.size(); ++i)
                    if (!reached[i] && set_size(local[i].bits() & ~cur.bits()) == 1) {
                        reached[i] = true;
                        ++count;
                        stack.push_back(i);
                    }
            }
            if (count != local.size())
                return std::pair{gens[a], gens[b]};
        }
    return std::nullopt;
}

LqVerdict has_linear_quotients(const EquigeneratedIdeal& ideal, const LqOptions& options) {
    const auto& gens = ideal.generators();
    const VariableOrder primary = options.order ? *options.order : VariableOrder::natural(ideal.n_vars());
    if (gens.size() <= 1)
        return lex_yes(gens);
    for (const auto& o : {primary, primary.reversed()})
        if (lex_quotients_check(ideal, o))
            return lex_yes(lex_sorted(ideal, o));
    if (gens.size() > options.max_generators)
        return {LqDecision::undecided, LqMethod::search, std::nullopt,
                "too large: " + std::to_string(gens.size()) + " generators exceed the bound of " +
                    std::to_string(options.max_generators)};
    if (const auto pair = restriction_disconnection(ideal))
        return {LqDecision::no, LqMethod::search, std::nullopt, "restriction to a pairwise lcm is disconnected"};

    constexpr std::uint64_t kProbeBudget = 2048;
    if (options.node_budget == 0 || options.node_budget > kProbeBudget) {
        OrderSearch probe(lex_sorted(ideal, primary), kProbeBudget);
        if (const auto found = probe.run()) {
            if (*found)
                return {LqDecision::yes, LqMethod::search, probe.order(), {}};
            return {LqDecision::no, LqMethod::search, std::nullopt, "no admissible ordering"};
        }
    }

    // Restrictions inherit linear quotients, so a proper restriction without them settles "no".
    VertexSet support = 0;
    for (Monomial g : gens)
        support |= g.bits();
    std::vector<VertexSet> lcms;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            lcms.push_back(gens[a].bits() | gens[b].bits());
    std::sort(lcms.begin(), lcms.end(), [](VertexSet x, VertexSet y) {
        return set_size(x) != set_size(y) ? set_size(x) < set_size(y) : x < y;
    });
    lcms.erase(std::unique(lcms.begin(), lcms.end()), lcms.end());
    for (VertexSet lcm : lcms) {
        if (lcm == support || set_size(lcm) <= ideal.degree() + 1)
            continue;
        const auto local = restrict_to(ideal, Monomial(lcm));
        if (local.size() == gens.size())
            continue;
        if (has_linear_quotients(local, options).decision == LqDecision::no)
            return {LqDecision::no, LqMethod::search, std::nullopt,
                    "restriction to " + nlohmann::json(Monomial(lcm).support()).dump() + " lacks linear quotients"};
    }

    OrderSearch search(lex_sorted(ideal, primary), options.node_budget);
    const auto found = search.run();
    if (!found)
        return {LqDecision::undecided, LqMethod::search, std::nullopt,
                "node budget of " + std::to_string(options.node_budget) + " exhausted"};
    if (*found)
        return {LqDecision::yes, LqMethod::search, search.order(), {}};
    return {LqDecision::no, LqMethod::search, std::nullopt, "no admissible ordering"};
}

std::string to_string(LqMethod m) { return m == LqMethod::lex ? "lex" : "search"; }

void to_json(nlohmann::json& j, const LqVerdict& v) {
    j = nlohmann::json::object();
    if (v.decision == LqDecision::undecided)
        j["lq"] = "undecided";
    else
        j["lq"] = v.has_lq();
    j["method"] = to_string(v.method);
    if (v.witness)
        j["witness"] = supports_json(*v.witness);
    if (!v.reason.empty())
        j["reason"] = v.reason;
}

} // namespace hsilab
