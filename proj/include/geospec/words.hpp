#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace geospec {

// Letters: 0..2g-1 are generators, 2g..4g-1 their inverses.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

Letter letter_inverse(Letter l, int n_gens);
Word word_inverse(const Word& w, int n_gens);
std::string word_str(const Word& w, int n_gens);
Word word_from_str(const std::string& s, int n_gens);

// Free reduction (cancel adjacent x x^-1), linear and cyclic variants.
Word free_reduce(const Word& w, int n_gens);
Word cyclic_reduce(const Word& w, int n_gens);

// Exponent-sum vector in Z^{n_gens}; the image in homology.
std::vector<std::int64_t> homology_vector(const Word& w, int n_gens);

// Dehn rewriting for a one-relator surface-group presentation. Any cyclic
// subword of R or R^-1 longer than |R|/2 is replaced by the inverse of its
// complement (strictly shorter); subwords of exactly half length are the
// length-preserving "flips" used to canonicalize conjugacy representatives.
class DehnRewriter {
public:
    DehnRewriter(Word relator, int n_gens);

    // no relator: free-group behaviour (arithmetic generator sets)
    static DehnRewriter free_group(int n_gens);

    int n_gens() const { return n_gens_; }
    const Word& relator() const { return relator_; }

    // Linear word reduced to Dehn normal form (freely reduced, no subword
    // of R^+- longer than half the relator).
    Word reduce(const Word& w) const;

    // Length-minimal cyclic form of the conjugacy class of w.
    Word reduce_cyclic(const Word& w) const;

    // Deterministic conjugacy-class key: length-minimal cyclic form,
    // lexicographically least over cyclic shifts and half-relator flips.
    // Two conjugate inputs map to the same key (Dehn's conjugacy algorithm);
    // flip_cap bounds the closure walk in pathological casesatur.
    Word canonical_cyclic(const Word& w, std::size_t flip_cap = 4096) const;

    // Canonical form together with the exact-power structure of the class:
    // returns (root, k) where some element of the closure is root^k with k
    // maximal. For flip-free words this is the plain cyclic period.
    struct ClassForm {
        Word canonical;
        Word root;
        int power = 1;
    };
    ClassForm class_form(const Word& w, std::size_t flip_cap = 4096) const;

private:
    Word relator_;
    int n_gens_;
    std::size_t half_ = 0;
    // keyed by packed letter runs
    std::unordered_map<std::uint64_t, Word> longer_than_half_;
    std::unordered_map<std::uint64_t, Word> half_flip_;

    bool has_relator() const { return !relator_.empty(); }
    std::optional<Word> try_shorten_cyclic(const Word& w) const;
};

// Smallest-period decomposition of a cyclically reduced word viewed as a
// cyclic word: w = root^k with the period minimal.
std::pair<Word, int> primitive_decompose(const Word& w);

}  // namespace geospec
