#include "hsilab/graph_io.hpp"

#include "hsilab/errors.hpp"

#include <charconv>

namespace hsilab {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int sixbits(std::string_view text, std::size_t pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6 byte outside the printable range 63..126", pos);
    return c - 63;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace

SimpleGraph decode_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kGraph6Header))
        base = kGraph6Header.size();
    if (text.size() <= base)
        throw ParseError("empty graph6 string", base);

    std::size_t pos = base;
    long n = 0;
    if (text[pos] == '~') {
        if (text.size() > pos + 1 && text[pos + 1] == '~')
            throw ParseError("graph6 orders above 258047 are not supported", pos);
        if (text.size() < pos + 4)
            throw ParseError("truncated graph6 order field", text.size());
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | sixbits(text, pos + i);
        if (n < 63)
            throw ParseError("non-canonical graph6 order field", pos);
        pos += 4;
    } else {
        n = sixbits(text, pos);
        pos += 1;
    }
    if (n > kMaxVertices)
        throw ParseError("graph6 order " + std::to_string(n) + " exceeds the 64-vertex capacity", base);

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t expected = pos + (bits + 5) / 6;
    if (text.size() != expected)
        throw ParseError("graph6 body length " + std::to_string(text.size() - pos) + " does not match order " +
                             std::to_string(n) + " (expected " + std::to_string(expected - pos) + ")",
                         std::min(text.size(), expected));

    SimpleGraph g(static_cast<int>(n));
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int chunk = sixbits(text, pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1)
                g.add_edge(i + 1, j + 1);
        }
    for (std::size_t b = bits; b % 6 != 0; ++b) {
        const int chunk = sixbits(text, pos + b / 6);
        if ((chunk >> (5 - b % 6)) & 1)
            throw ParseError("nonzero padding bits in graph6 string", pos + b / 6);
    }
    return g;
}

std::string encode_graph6(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | ((g.adjacency(j + 1) & vertex_bit(i + 1)) != 0 ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    return out;
}

std::vector<SimpleGraph> read_graph6_stream(std::istream& in) {
    std::vector<SimpleGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto body = trim(line);
        if (!body.empty())
            out.push_back(decode_graph6(body));
    }
    return out;
}

SimpleGraph parse_edge_list(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos)
        throw ParseError("edge list needs the form \"n; i-j,...\"", text.size());

    auto parse_int = [&](std::string_view field, std::size_t offset) {
        const auto t = trim(field);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
        if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
            throw ParseError("expected an integer, got \"" + std::string(t) + "\"", offset);
        return value;
    };

    const int n = parse_int(text.substr(0, semi), 0);
    if (n < 1 || n > kMaxVertices)
        throw ParseError("vertex count must lie in [1, 64]", 0);
    SimpleGraph g(n);

    std::size_t pos = semi + 1;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        const auto item = text.substr(pos, comma - pos);
        if (!trim(item).empty()) {
            const auto dash = item.find('-');
            if (dash == std::string_view::npos)
                throw ParseError("edge needs the form i-j", pos);
            const int u = parse_int(item.substr(0, dash), pos);
            const int v = parse_int(item.substr(dash + 1), pos + dash + 1);
            if (u < 1 || u > n || v < 1 || v > n || u == v)
                throw ParseError("invalid edge " + std::to_string(u) + "-" + std::to_string(v), pos);
            g.add_edge(u, v);
        }
        pos = comma + 1;
    }
    return g;
}

std::string format_edge_list(const SimpleGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + ";";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        out += first ? " " : ",";
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return out;
}

SimpleGraph parse_graph(std::string_view text) {
    const auto body = trim(text);
    if (body.find(';') != std::string_view::npos)
        return parse_edge_list(body);
    return decode_graph6(body);
}

} // namespace hsilab
