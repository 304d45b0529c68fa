#ifndef PMCUTS_FORMATS_HPP
#define PMCUTS_FORMATS_HPP

#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmcuts/embedding.hpp"
#include "pmcuts/graph.hpp"
#include "pmcuts/orientation.hpp"

namespace pmcuts {

// Format errors carry the byte offset of the offending input.
struct FormatError : std::runtime_error {
    size_t offset;
    FormatError(const std::string& what, size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

namespace detail {

// Bit reader over graph6-style printable bytes (value = byte - 63).
class SixBitReader {
  public:
    SixBitReader(const std::string& s, size_t pos) : s_(s), pos_(pos) {}

    int read_bit() {
        if (bits_left_ == 0) {
            if (pos_ >= s_.size()) throw FormatError("unexpected end of data", pos_);
            char c = s_[pos_];
            if (c < 63 || c > 126) throw FormatError("out-of-range character", pos_);
            cur_ = c - 63;
            bits_left_ = 6;
            ++pos_;
        }
        --bits_left_;
        return (cur_ >> bits_left_) & 1;
    }

    long long read_bits(int k) {
        long long v = 0;
        for (int i = 0; i < k; ++i) v = v << 1 | read_bit();
        return v;
    }

    // remaining bits in the current partial byte must be a legal padding
    void check_padding_zero() const {
        if (bits_left_ > 0 && (cur_ & ((1 << bits_left_) - 1)) != 0)
            throw FormatError("nonzero trailing bits", pos_ - 1);
    }

    size_t pos() const { return pos_; }
    int bits_buffered() const { return bits_left_; }

  private:
    const std::string& s_;
    size_t pos_;
    int cur_ = 0;
    int bits_left_ = 0;
};

class SixBitWriter {
  public:
    void write_bit(int b) {
        cur_ = cur_ << 1 | (b & 1);
        if (++nbits_ == 6) flush_byte();
    }
    void write_bits(long long v, int k) {
        for (int i = k - 1; i >= 0; --i) write_bit(static_cast<int>(v >> i) & 1);
    }
    void pad_with(int bit) {
        while (nbits_ != 0) write_bit(bit);
    }
    int pending_bits() const { return nbits_; }
    const std::string& str() const { return out_; }

  private:
    void flush_byte() {
        out_.push_back(static_cast<char>(cur_ + 63));
        cur_ = 0;
        nbits_ = 0;
    }
    std::string out_;
    int cur_ = 0;
    int nbits_ = 0;
};

inline long long read_graph6_order(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw FormatError("empty record", pos);
    auto val = [&](size_t i) -> long long {
        if (i >= s.size()) throw FormatError("truncated order field", i);
        char c = s[i];
        if (c < 63 || c > 126) throw FormatError("out-of-range character in order", i);
        return c - 63;
    };
    long long v0 = val(pos);
    if (v0 < 63) {
        ++pos;
        return v0;
    }
    if (val(pos + 1) < 63) {  // 126 x y z
        long long n = (val(pos + 1) << 12) | (val(pos + 2) << 6) | val(pos + 3);
        pos += 4;
        return n;
    }
    long long n = 0;  // 126 126 + six bytes
    for (int i = 0; i < 6; ++i) n = n << 6 | val(pos + 2 + i);
    pos += 8;
    return n;
}

inline void write_graph6_order(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>((n >> 12 & 63) + 63));
        out.push_back(static_cast<char>((n >> 6 & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph order too large to encode");
    }
}

inline int bits_for(long long n) {  // bits needed to represent n-1 (>=1)
    int k = 1;
    while ((1LL << k) < n) ++k;
    return k;
}

}  // namespace detail

// ---- graph6 ----------------------------------------------------------------

inline MultiGraph parse_graph6(const std::string& line) {
    size_t pos = 0;
    if (!line.empty() && line[0] == ':')
        throw FormatError("sparse6 record passed to graph6 parser", 0);
    if (!line.empty() && line[0] == '&')
        throw FormatError("digraph6 record passed to graph6 parser", 0);
    long long n = detail::read_graph6_order(line, pos);
    detail::SixBitReader r(line, pos);
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (r.read_bit()) edges.push_back({i, j});
    r.check_padding_zero();
    if (r.pos() != line.size()) throw FormatError("trailing characters after record", r.pos());
    return from_sorted_edge_set(static_cast<int>(n), std::move(edges));
}

inline std::string write_graph6(const MultiGraph& g) {
    if (!g.is_simple())
        throw std::invalid_argument("write_graph6: parallel edges are not representable");
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (const auto& e : g.edges) adj[e.a][e.b] = adj[e.b][e.a] = 1;
    std::string out;
    detail::write_graph6_order(out, g.n);
    detail::SixBitWriter w;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) w.write_bit(adj[i][j]);
    w.pad_with(0);
    return out + w.str();
}

// ---- sparse6 ---------------------------------------------------------------

inline MultiGraph parse_sparse6(const std::string& line) {
    if (line.empty() || line[0] != ':') throw FormatError("sparse6 record must start with ':'", 0);
    size_t pos = 1;
    long long n = detail::read_graph6_order(line, pos);
    int k = detail::bits_for(n);
    detail::SixBitReader r(line, pos);
    MultiGraph g;
    g.n = static_cast<int>(n);
    long long v = 0;
    // decode (b, x) pairs until the padding tail is all that remains
    while (true) {
        long long remaining_bits =
            6LL * (static_cast<long long>(line.size()) - static_cast<long long>(r.pos())) +
            r.bits_buffered();
        if (remaining_bits < 1 + k) break;
        int b = r.read_bit();
        long long x = r.read_bits(k);
        if (b) ++v;
        if (x > v)
            v = x;
        else if (v < n) {
            if (x == v) throw FormatError("sparse6 loop encountered", r.pos());
            g.add_edge(static_cast<int>(x), static_cast<int>(v));
        }
        if (v >= n) break;
    }
    return g;
}

inline std::string write_sparse6(const MultiGraph& g) {
    // edges sorted by (max endpoint, min endpoint)
    std::vector<std::pair<int, int>> es;
    es.reserve(g.edges.size());
    for (const auto& e : g.edges) es.push_back({std::max(e.a, e.b), std::min(e.a, e.b)});
    std::sort(es.begin(), es.end());

    std::string out = ":";
    detail::write_graph6_order(out, g.n);
    int k = detail::bits_for(g.n);
    detail::SixBitWriter w;
    long long v = 0;
    for (auto [hi, lo] : es) {
        if (hi == v + 1) {
            w.write_bit(1);
            ++v;
        } else if (hi > v) {
            w.write_bit(0);
            w.write_bits(hi, k);
            v = hi;
            w.write_bit(0);
        } else {
            w.write_bit(0);
        }
        w.write_bits(lo, k);
    }
    // Padding is 1-bits, except that when n is a small power of two and the
    // tail could decode as a bogus pair touching vertex n-1, a single 0 bit
    // goes first (rule from the format document).
    int pad = (6 - w.pending_bits() % 6) % 6;
    if (k < 6 && g.n == (1 << k) && pad >= k && v < g.n - 1) w.write_bit(0);
    w.pad_with(1);
    return out + w.str();
}

// ---- digraph6 --------------------------------------------------------------

// Each arc becomes its own (possibly parallel) directed edge.
inline std::pair<MultiGraph, PartialOrientation> parse_digraph6(const std::string& line) {
    if (line.empty() || line[0] != '&') throw FormatError("digraph6 record must start with '&'", 0);
    size_t pos = 1;
    long long n = detail::read_graph6_order(line, pos);
    detail::SixBitReader r(line, pos);
    std::vector<std::vector<char>> arc(n, std::vector<char>(n, 0));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            int b = r.read_bit();
            if (b) {
                if (i == j) throw FormatError("digraph6 loop not supported", r.pos());
                arc[i][j] = 1;
            }
        }
    r.check_padding_zero();
    MultiGraph g;
    g.n = static_cast<int>(n);
    PartialOrientation o;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (arc[a][b]) {
                g.add_edge(a, b);
                o.dir.push_back(EdgeDir::Forward);
            }
            if (arc[b][a]) {
                g.add_edge(a, b);
                o.dir.push_back(EdgeDir::Backward);
            }
        }
    return {g, o};
}

inline std::string write_digraph6(const MultiGraph& g, const PartialOrientation& o) {
    if (!o.is_full())
        throw std::invalid_argument("write_digraph6: orientation must be full");
    std::vector<std::vector<char>> arc(g.n, std::vector<char>(g.n, 0));
    for (int e = 0; e < g.m(); ++e) arc[tail_of(g, o, e)][head_of(g, o, e)] = 1;
    std::string out = "&";
    detail::write_graph6_order(out, g.n);
    detail::SixBitWriter w;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) w.write_bit(arc[i][j]);
    w.pad_with(0);
    return out + w.str();
}

// ---- sidecar orientation format -------------------------------------------
// graph6 line, then "O:" + one of {0,1,2} per edge in graph6 lexicographic
// edge order; 0 undirected, 1 min->max endpoint, 2 reverse.

inline std::string write_sidecar(const MultiGraph& g, const PartialOrientation& o) {
    std::string out = write_graph6(g);
    out += "\nO:";
    // emit in the lex edge order the graph6 reader will reconstruct, not in
    // the writer graph's storage order
    std::vector<std::pair<std::pair<int, int>, char>> entries;
    for (int e = 0; e < g.m(); ++e) {
        EdgeDir d = o.dir[e];
        // normalize relative to (min,max) endpoint order
        bool flipped = g.edges[e].a > g.edges[e].b;
        char c = '0';
        if (d != EdgeDir::Undirected) c = (d == EdgeDir::Forward) != flipped ? '1' : '2';
        entries.push_back({{std::min(g.edges[e].a, g.edges[e].b),
                            std::max(g.edges[e].a, g.edges[e].b)},
                           c});
    }
    std::sort(entries.begin(), entries.end());
    for (const auto& [ab, c] : entries) out += c;
    return out;
}

inline std::pair<MultiGraph, PartialOrientation> parse_sidecar(const std::string& graph_line,
                                                               const std::string& orient_line) {
    MultiGraph g = parse_graph6(graph_line);
    if (orient_line.size() < 2 || orient_line[0] != 'O' || orient_line[1] != ':')
        throw FormatError("orientation line must start with \"O:\"", 0);
    if (static_cast<int>(orient_line.size()) - 2 != g.m())
        throw FormatError("orientation string length does not match edge count", 2);
    PartialOrientation o(g.m());
    for (int e = 0; e < g.m(); ++e) {
        char c = orient_line[2 + e];
        // edges from parse_graph6 always have a < b
        if (c == '0')
            o.dir[e] = EdgeDir::Undirected;
        else if (c == '1')
            o.dir[e] = EdgeDir::Forward;
        else if (c == '2')
            o.dir[e] = EdgeDir::Backward;
        else
            throw FormatError("orientation characters must be 0, 1 or 2", 2 + e);
    }
    return {g, o};
}

// ---- planar_code (plantri byte format) ------------------------------------

inline std::optional<PlaneEmbedding> read_planar_code_record(std::istream& in) {
    int first = in.peek();
    if (first == std::char_traits<char>::eof()) return std::nullopt;
    int n = in.get();
    if (n <= 0) throw FormatError("invalid planar_code vertex count", 0);
    PlaneEmbedding emb;
    emb.graph.n = n;
    std::vector<std::vector<int>> nbr_lists(n);
    for (int v = 0; v < n; ++v) {
        while (true) {
            int b = in.get();
            if (b == std::char_traits<char>::eof())
                throw FormatError("truncated planar_code record", static_cast<size_t>(in.tellg()));
            if (b == 0) break;
            if (b > n) throw FormatError("planar_code neighbor out of range",
                                         static_cast<size_t>(in.tellg()));
            nbr_lists[v].push_back(b - 1);
        }
    }
    // assign edge ids: first encounter of each (v,w) pair creates the edge;
    // repeated pairs (parallel edges) are matched up in rotation order
    std::vector<std::vector<std::pair<int, int>>> pending(n);  // at w: (v, edge-id) waiting
    emb.rotation.assign(n, {});
    for (int v = 0; v < n; ++v) {
        for (int w : nbr_lists[v]) {
            int eid = -1;
            auto& pend = pending[v];
            for (auto it = pend.begin(); it != pend.end(); ++it)
                if (it->first == w) {
                    eid = it->second;
                    pend.erase(it);
                    break;
                }
            if (eid == -1) {
                eid = emb.graph.m();
                emb.graph.add_edge(v, w);
                pending[w].push_back({v, eid});
            }
            emb.rotation[v].push_back(eid);
        }
    }
    return emb;
}

inline std::vector<PlaneEmbedding> parse_planar_code(std::istream& in) {
    // optional ">>planar_code<<" header
    std::string header = ">>planar_code<<";
    if (in.peek() == '>') {
        std::string buf(header.size(), '\0');
        in.read(buf.data(), static_cast<std::streamsize>(header.size()));
        if (buf != header) throw FormatError("bad planar_code header", 0);
    }
    std::vector<PlaneEmbedding> out;
    while (auto rec = read_planar_code_record(in)) out.push_back(std::move(*rec));
    return out;
}

inline void write_planar_code_record(std::ostream& out, const PlaneEmbedding& emb) {
    if (emb.graph.n > 255) throw std::invalid_argument("planar_code writer limited to n <= 255");
    out.put(static_cast<char>(emb.graph.n));
    for (int v = 0; v < emb.graph.n; ++v) {
        for (int e : emb.rotation[v]) out.put(static_cast<char>(emb.graph.other(e, v) + 1));
        out.put(0);
    }
}

// ---- streaming line readers ------------------------------------------------

// Reads every graph6/sparse6 record in a stream; empty input is an empty list.
inline std::vector<MultiGraph> read_graphs(std::istream& in) {
    std::vector<MultiGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.rfind(">>sparse6<<", 0) == 0) line = line.substr(11);
        if (line.empty()) continue;
        if (line[0] == ':')
            out.push_back(parse_sparse6(line));
        else
            out.push_back(parse_graph6(line));
    }
    return out;
}

inline std::vector<std::pair<MultiGraph, PartialOrientation>> read_digraphs(std::istream& in) {
    std::vector<std::pair<MultiGraph, PartialOrientation>> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>digraph6<<", 0) == 0) line = line.substr(12);
        if (line.empty()) continue;
        out.push_back(parse_digraph6(line));
    }
    return out;
}

// Sidecar stream: alternating graph6 and "O:" lines.
inline std::vector<std::pair<MultiGraph, PartialOrientation>> read_sidecars(std::istream& in) {
    std::vector<std::pair<MultiGraph, PartialOrientation>> out;
    std::string gline, oline;
    while (std::getline(in, gline)) {
        while (!gline.empty() && (gline.back() == '\r')) gline.pop_back();
        if (gline.empty()) continue;
        if (!std::getline(in, oline))
            throw FormatError("sidecar stream ended before orientation line", 0);
        while (!oline.empty() && (oline.back() == '\r')) oline.pop_back();
        out.push_back(parse_sidecar(gline, oline));
    }
    return out;
}

}  // namespace pmcuts

#endif
