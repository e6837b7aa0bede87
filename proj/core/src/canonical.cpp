#include "contractix/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace contractix {

namespace {

constexpr int kEqual = 0;
constexpr int kLess = 1;

std::size_t key_bytes_for(int n) {
    return 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8;
}

class Canonicalizer {
public:
    explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {
        for (int v = 0; v < n_; ++v) rows_[v] = g.neighborhood(v).bits();
    }

    CanonicalForm run() {
        seed_twin_automorphisms();
        assigned_.reserve(static_cast<std::size_t>(n_));
        cur_.assign(key_bytes_for(n_), 0);
        cur_[0] = static_cast<std::uint8_t>(n_);
        best_.clear();
        descend(kEqual);

        CanonicalForm out;
        out.key.bytes.assign(best_.begin(), best_.end());
        out.perm.assign(static_cast<std::size_t>(n_), 0);
        for (int pos = 0; pos < n_; ++pos) out.perm[static_cast<std::size_t>(best_order_[pos])] = pos;
        return out;
    }

private:
    // Transpositions of twin vertices (equal neighborhoods apart from each
    // other) generate automorphisms that fix everything else; seeding them
    // collapses the branching on complete and other twin-heavy graphs.
    void seed_twin_automorphisms() {
        for (int v = 0; v < n_; ++v) {
            for (int u = v + 1; u < n_; ++u) {
                std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
                if ((rows_[u] & mask) != (rows_[v] & mask)) continue;
                if (((rows_[u] >> v) & 1u) != ((rows_[v] >> u) & 1u)) continue;
                std::vector<int> sigma(static_cast<std::size_t>(n_));
                for (int w = 0; w < n_; ++w) sigma[static_cast<std::size_t>(w)] = w;
                std::swap(sigma[static_cast<std::size_t>(u)], sigma[static_cast<std::size_t>(v)]);
                automorphisms_.push_back(std::move(sigma));
                break;  // one transposition per vertex is enough to chain a class
            }
        }
    }

    // Column bits of candidate w against the assigned prefix, MSB = position 0.
    std::uint64_t column_of(int w) const {
        std::uint64_t col = 0;
        for (std::size_t i = 0; i < assigned_.size(); ++i)
            col = (col << 1) | ((rows_[assigned_[i]] >> static_cast<unsigned>(w)) & 1u);
        return col;
    }

    void set_bit(std::size_t k, bool on) {
        std::size_t byte = 1 + k / 8;
        std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - k % 8));
        if (on)
            cur_[byte] |= mask;
        else
            cur_[byte] &= static_cast<std::uint8_t>(~mask);
    }

    bool best_bit(std::size_t k) const {
        return (best_[1 + k / 8] >> (7 - k % 8)) & 1u;
    }

    // Appends the column for w; returns the updated compare state or -1 when
    // the prefix already exceeds the best key.
    int append_column(int w, int state) {
        std::size_t d = assigned_.size();
        std::size_t base = d * (d - 1) / 2;
        std::uint64_t col = column_of(w);
        for (std::size_t i = 0; i < d; ++i) {
            bool bit = (col >> (d - 1 - i)) & 1u;
            set_bit(base + i, bit);
            if (state == kEqual && !best_.empty()) {
                bool b = best_bit(base + i);
                if (bit != b) state = bit < b ? kLess : -1;
                if (state == -1) return -1;
            }
        }
        return state;
    }

    void record_leaf(int state) {
        if (best_.empty() || state == kLess) {
            best_ = cur_;
            best_order_.assign(assigned_.begin(), assigned_.end());
            // the path to this leaf now matches the best key exactly
            std::fill(state_stack_.begin(), state_stack_.end(), kEqual);
            return;
        }
        // equal key: the two orderings differ by an automorphism
        if (automorphisms_.size() >= 256) return;
        std::vector<int> sigma(static_cast<std::size_t>(n_));
        for (int pos = 0; pos < n_; ++pos)
            sigma[static_cast<std::size_t>(best_order_[pos])] = assigned_[static_cast<std::size_t>(pos)];
        automorphisms_.push_back(std::move(sigma));
    }

    // Orbit closure of `tried` under stored automorphisms that fix the
    // assigned prefix pointwise. Any candidate inside the closure explores a
    // subtree isomorphic to one already searched.
    std::uint64_t closure_of_tried(std::uint64_t tried) const {
        std::uint64_t prefix = 0;
        for (int v : assigned_) prefix |= std::uint64_t{1} << v;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& sigma : automorphisms_) {
                bool fixes = true;
                for (int v : assigned_) {
                    if (sigma[static_cast<std::size_t>(v)] != v) {
                        fixes = false;
                        break;
                    }
                }
                if (!fixes) continue;
                std::uint64_t image = 0;
                for (std::uint64_t rest = tried; rest; rest &= rest - 1) {
                    int v = std::countr_zero(rest);
                    image |= std::uint64_t{1} << sigma[static_cast<std::size_t>(v)];
                    image |= std::uint64_t{1} << index_of(sigma, v);
                }
                if ((image & ~tried) != 0) {
                    tried |= image;
                    grew = true;
                }
            }
        }
        return tried & ~prefix;
    }

    static int index_of(const std::vector<int>& sigma, int value) {
        for (std::size_t i = 0; i < sigma.size(); ++i)
            if (sigma[i] == value) return static_cast<int>(i);
        return value;
    }

    void descend(int state) {
        std::size_t d = assigned_.size();
        if (static_cast<int>(d) == n_) {
            record_leaf(state);
            return;
        }

        std::uint64_t unused = ((n_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1));
        for (int v : assigned_) unused &= ~(std::uint64_t{1} << v);

        // try small columns first so the greedy dive lands near the minimum
        struct Cand {
            std::uint64_t col;
            int v;
        };
        std::vector<Cand> cands;
        cands.reserve(static_cast<std::size_t>(n_));
        for (std::uint64_t rest = unused; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            cands.push_back({column_of(v), v});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            return a.col != b.col ? a.col < b.col : a.v < b.v;
        });

        std::uint64_t tried = 0;
        state_stack_.push_back(state);
        for (const Cand& c : cands) {
            if (!automorphisms_.empty() && (closure_of_tried(tried) >> c.v) & 1u) continue;
            int next_state = append_column(c.v, state_stack_.back());
            if (next_state == -1) {
                tried |= std::uint64_t{1} << c.v;
                continue;
            }
            assigned_.push_back(c.v);
            descend(next_state);
            assigned_.pop_back();
            tried |= std::uint64_t{1} << c.v;
        }
        state_stack_.pop_back();
    }

    const Graph& g_;
    int n_;
    std::array<std::uint64_t, Graph::max_order> rows_{};
    std::vector<int> assigned_;
    std::vector<int> state_stack_;
    std::vector<std::uint8_t> cur_;
    std::vector<std::uint8_t> best_;
    std::vector<int> best_order_;  // canonical position -> original vertex
    std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    return Canonicalizer(g).run();
}

CanonicalKey canonical_key(const Graph& g) {
    return canonical_form(g).key;
}

Graph graph_from_key(const CanonicalKey& key) {
    if (key.bytes.empty()) throw std::invalid_argument("empty canonical key");
    int n = key.order();
    if (n < 1 || n > Graph::max_order) throw std::invalid_argument("canonical key order out of range");
    if (key.bytes.size() != key_bytes_for(n))
        throw std::invalid_argument("canonical key has wrong length");

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            bool bit = (static_cast<unsigned char>(key.bytes[1 + k / 8]) >> (7 - k % 8)) & 1u;
            if (bit) g = g.with_edge(i, j);
        }
    }
    return g;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_key(a) == canonical_key(b);
}

std::string CanonicalKey::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

std::optional<CanonicalKey> CanonicalKey::from_hex(std::string_view s) {
    if (s.size() % 2 != 0 || s.empty()) return std::nullopt;
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    CanonicalKey key;
    key.bytes.reserve(s.size() / 2);
    for (std::size_t i = 0; i < s.size(); i += 2) {
        int hi = nibble(s[i]), lo = nibble(s[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        key.bytes.push_back(static_cast<char>((hi << 4) | lo));
    }
    return key;
}

}  // namespace contractix
