#include "geospec/words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "geospec/errors.hpp"

namespace geospec {

Letter letter_inverse(Letter l, int n_gens) {
    return l < n_gens ? Letter(l + n_gens) : Letter(l - n_gens);
}

Word word_inverse(const Word& w, int n_gens) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(letter_inverse(*it, n_gens));
    return out;
}

std::string word_str(const Word& w, int n_gens) {
    if (n_gens > 26) throw BadParametersError("word_str supports at most 26 generators");
    std::string s;
    for (Letter l : w) s.push_back(l < n_gens ? char('a' + l) : char('A' + (l - n_gens)));
    return s;
}

Word word_from_str(const std::string& s, int n_gens) {
    Word w;
    for (char c : s) {
        if (c >= 'a' && c < 'a' + n_gens)
            w.push_back(Letter(c - 'a'));
        else if (c >= 'A' && c < 'A' + n_gens)
            w.push_back(Letter(c - 'A' + n_gens));
        else
            throw BadParametersError(std::string("bad word letter: ") + c);
    }
    return w;
}

Word free_reduce(const Word& w, int n_gens) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (!out.empty() && out.back() == letter_inverse(l, n_gens))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(const Word& w, int n_gens) {
    Word v = free_reduce(w, n_gens);
    std::size_t lo = 0, hi = v.size();
    while (hi - lo >= 2 && v[lo] == letter_inverse(v[hi - 1], n_gens)) {
        ++lo;
        --hi;
    }
    return Word(v.begin() + lo, v.begin() + hi);
}

std::vector<std::int64_t> homology_vector(const Word& w, int n_gens) {
    std::vector<std::int64_t> h(n_gens, 0);
    for (Letter l : w) {
        if (l < n_gens)
            ++h[l];
        else
            --h[l - n_gens];
    }
    return h;
}

namespace {

std::uint64_t pack(const Letter* p, std::size_t n) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < n; ++i) k = (k << 8) | (std::uint64_t(p[i]) + 1);
    return k;
}

Word lexmin_rotation(const Word& w) {
    const std::size_t n = w.size();
    if (n <= 1) return w;
    Word dd(w);
    dd.insert(dd.end(), w.begin(), w.end());
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            if (dd[s + i] != dd[best + i]) {
                if (dd[s + i] < dd[best + i]) best = s;
                break;
            }
        }
    }
    return Word(dd.begin() + best, dd.begin() + best + n);
}

}  // namespace

DehnRewriter::DehnRewriter(Word relator, int n_gens)
    : relator_(std::move(relator)), n_gens_(n_gens) {
    if (relator_.empty()) return;
    if (relator_.size() % 2 != 0) throw BadParametersError("surface relator must have even length");
    half_ = relator_.size() / 2;
    if (half_ + 1 > 8) throw BadParametersError("relator too long for packed Dehn tables");
    Word rinv = word_inverse(relator_, n_gens_);
    for (const Word* base : {&relator_, &rinv}) {
        std::size_t n = base->size();
        for (std::size_t s = 0; s < n; ++s) {
            Word rot;
            rot.reserve(n);
            for (std::size_t i = 0; i < n; ++i) rot.push_back((*base)[(s + i) % n]);
            // rot = u v with u v = 1 in the group, so u is replaced by v^-1
            Word u_long(rot.begin(), rot.begin() + half_ + 1);
            Word v_long(rot.begin() + half_ + 1, rot.end());
            longer_than_half_[pack(u_long.data(), u_long.size())] = word_inverse(v_long, n_gens_);
            Word u_half(rot.begin(), rot.begin() + half_);
            Word v_half(rot.begin() + half_, rot.end());
            half_flip_[pack(u_half.data(), u_half.size())] = word_inverse(v_half, n_gens_);
        }
    }
}

DehnRewriter DehnRewriter::free_group(int n_gens) { return DehnRewriter(Word{}, n_gens); }

Word DehnRewriter::reduce(const Word& w) const {
    Word v = free_reduce(w, n_gens_);
    if (!has_relator()) return v;
    const std::size_t m = half_ + 1;
    bool changed = true;
    while (changed) {
        changed = false;
        if (v.size() < m) break;
        for (std::size_t i = 0; i + m <= v.size(); ++i) {
            auto it = longer_than_half_.find(pack(v.data() + i, m));
            if (it == longer_than_half_.end()) continue;
            Word next(v.begin(), v.begin() + i);
            next.insert(next.end(), it->second.begin(), it->second.end());
            next.insert(next.end(), v.begin() + i + m, v.end());
            v = free_reduce(next, n_gens_);
            changed = true;
            break;
        }
    }
    return v;
}

std::optional<Word> DehnRewriter::try_shorten_cyclic(const Word& w) const {
    const std::size_t n = w.size();
    const std::size_t m = half_ + 1;
    if (n < m) return std::nullopt;
    Word dd(w);
    dd.insert(dd.end(), w.begin(), w.end());
    for (std::size_t i = 0; i < n; ++i) {
        auto it = longer_than_half_.find(pack(dd.data() + i, m));
        if (it == longer_than_half_.end()) continue;
        Word rot(dd.begin() + i, dd.begin() + i + n);
        Word next(it->second);
        next.insert(next.end(), rot.begin() + m, rot.end());
        return cyclic_reduce(next, n_gens_);
    }
    return std::nullopt;
}

Word DehnRewriter::reduce_cyclic(const Word& w) const {
    Word v = cyclic_reduce(w, n_gens_);
    if (!has_relator()) return v;
    while (true) {
        auto shorter = try_shorten_cyclic(v);
        if (!shorter) break;
        v = *shorter;
    }
    return v;
}

Word DehnRewriter::canonical_cyclic(const Word& w, std::size_t flip_cap) const {
    return class_form(w, flip_cap).canonical;
}

// The minimal cyclic forms of a conjugacy class form one orbit under cyclic
// shifts and half-relator flips (Dehn's conjugacy algorithm for surface
// groups). The class key is the lexicographic minimum of that orbit; the
// orbit element with the most repetitive structure carries the primitive
// decomposition. flip_cap bounds the walk; if it is ever hit the key falls
// back to the shift-minimal form, which downstream guards with the length
// fingerprint.
DehnRewriter::ClassForm DehnRewriter::class_form(const Word& w, std::size_t flip_cap) const {
    ClassForm out;
    Word v = reduce_cyclic(w);
    if (v.empty()) return {Word{}, Word{}, 1};
    const std::size_t n = v.size();

    std::set<Word> seen;
    std::vector<Word> queue;
    Word best = lexmin_rotation(v);
    Word best_periodic = best;
    int best_power = primitive_decompose(best).second;

    auto visit = [&](const Word& u) {
        Word key = lexmin_rotation(u);
        if (!seen.insert(key).second) return;
        if (key < best) best = key;
        int k = primitive_decompose(key).second;
        if (k > best_power) {
            best_power = k;
            best_periodic = key;
        }
        if (seen.size() <= flip_cap) queue.push_back(key);
    };
    visit(v);

    if (has_relator() && n >= half_) {
        while (!queue.empty()) {
            Word cur = queue.back();
            queue.pop_back();
            Word dd(cur);
            dd.insert(dd.end(), cur.begin(), cur.end());
            for (std::size_t i = 0; i < n; ++i) {
                auto it = half_flip_.find(pack(dd.data() + i, half_));
                if (it == half_flip_.end()) continue;
                Word rot(dd.begin() + i, dd.begin() + i + n);
                Word next(it->second);
                next.insert(next.end(), rot.begin() + half_, rot.end());
                Word red = reduce_cyclic(next);
                if (red.size() < n) return class_form(red, flip_cap);  // flip exposed a shortening
                visit(red);
            }
            if (seen.size() > flip_cap) break;
        }
    }

    out.canonical = best;
    auto [root, k] = primitive_decompose(best_periodic);
    out.power = k;
    out.root = (k == 1) ? best : canonical_cyclic(root, flip_cap);
    return out;
}

std::pair<Word, int> primitive_decompose(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0) return {w, 1};
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (w[i] != w[(i + p) % n]) ok = false;
        if (ok) return {Word(w.begin(), w.begin() + p), int(n / p)};
    }
    return {w, 1};
}

}  // namespace geospec
