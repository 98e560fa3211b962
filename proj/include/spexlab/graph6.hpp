#pragma once

#include <string>

#include "spexlab/errors.hpp"
#include "spexlab/graph.hpp"

namespace spexlab {

// graph6 codec, bit-exact per the standard format: N(n) followed by the
// upper triangle of the adjacency matrix in column order (x_{0,1}, x_{0,2},
// x_{1,2}, x_{0,3}, ...), packed big-endian into 6-bit groups, each + 63.

namespace detail {

inline void append_n(std::string& out, long n) {
    auto push6 = [&](long v, int groups) {
        for (int i = groups - 1; i >= 0; --i)
            out += char(((v >> (6 * i)) & 63) + 63);
    };
    if (n <= 62) {
        out += char(n + 63);
    } else if (n <= 258047) {
        out += 126;
        push6(n, 3);
    } else {
        out += 126;
        out += 126;
        push6(n, 6);
    }
}

inline long read_n(const std::string& s, size_t& pos) {
    auto byte = [&](size_t i) -> long {
        if (i >= s.size()) throw parse_error("graph6: truncated header", i);
        unsigned char c = s[i];
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of range", i);
        return c - 63;
    };
    if (byte(pos) != 63) return byte(pos++);
    ++pos;
    int groups = 3;
    if (byte(pos) == 63) {
        ++pos;
        groups = 6;
    }
    long n = 0;
    for (int i = 0; i < groups; ++i) n = (n << 6) | byte(pos++);
    return n;
}

}  // namespace detail

inline std::string graph6_encode(const Graph& g) {
    std::string out;
    detail::append_n(out, g.order());
    int bits = 0, acc = 0;
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out += char(acc + 63);
                bits = acc = 0;
            }
        }
    if (bits) out += char((acc << (6 - bits)) + 63);
    return out;
}

inline Graph graph6_decode(const std::string& s) {
    if (s.empty()) throw parse_error("graph6: empty string");
    size_t pos = 0;
    long n = detail::read_n(s, pos);
    if (n > 100000) throw parse_error("graph6: order too large for this tool");
    long pairs = n * (n - 1) / 2;
    size_t need = size_t((pairs + 5) / 6);
    if (s.size() - pos != need)
        throw parse_error("graph6: body length mismatch", pos);
    Graph g{int(n)};
    long bit = 0;
    for (size_t i = pos; i < s.size(); ++i) {
        unsigned char c = s[i];
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of range", i);
        int v6 = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            if (bit >= pairs) {
                if ((v6 >> b) & 1) throw parse_error("graph6: nonzero padding", i);
                continue;
            }
            if ((v6 >> b) & 1) {
                // recover (u, v) with u < v from the column-order index
                long idx = bit, v = 1;
                while (idx >= v) idx -= v, ++v;
                g.add_edge(int(idx), int(v));
            }
        }
    }
    return g;
}

}  // namespace spexlab
