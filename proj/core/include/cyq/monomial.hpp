#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyq/rational.hpp"

namespace cyq {

// A product of projective spaces P^{n_1} x ... x P^{n_m}.
struct Ambient {
    std::vector<unsigned> dims;

    unsigned factors() const { return static_cast<unsigned>(dims.size()); }
    void validate() const;
    bool operator==(const Ambient&) const = default;
};

// Generalized permutation matrix: one nonzero entry per row and column, each
// a root of unity stored as an exponent over the owning automorphism's order.
class GenPermMatrix {
  public:
    GenPermMatrix() = default;
    GenPermMatrix(std::vector<unsigned> col, std::vector<unsigned> exp);

    static GenPermMatrix identity(unsigned size);

    unsigned size() const { return static_cast<unsigned>(col_.size()); }
    unsigned col(unsigned row) const { return col_[row]; }
    unsigned exp(unsigned row) const { return exp_[row]; }
    // Row carrying the unique nonzero entry of a column.
    unsigned row_of_col(unsigned col) const;

    bool operator==(const GenPermMatrix&) const = default;

  private:
    friend class MonomialAutomorphism;
    std::vector<unsigned> col_;
    std::vector<unsigned> exp_;
};

/*
 * An automorphism of a product of projective spaces of the shape
 * (matrices) o (permutation of factors): factor sigma^{-1}(i) is mapped to
 * factor i by the generalized permutation matrix mats[i], i.e.
 * (g.x)_i = mats[i] * x_{sigma^{-1}(i)}. Entries are roots of unity stored as
 * exponents modulo a common root order. Instances are kept in a canonical
 * form (each matrix projectively normalized so its first row has exponent 0,
 * root order minimal), so structural equality is equality in the group.
 */
class MonomialAutomorphism {
  public:
    MonomialAutomorphism(Ambient amb, std::vector<unsigned> sigma, unsigned long root_order,
                         std::vector<GenPermMatrix> mats);

    static MonomialAutomorphism identity(Ambient amb);

    const Ambient& ambient() const { return amb_; }
    const std::vector<unsigned>& sigma() const { return sigma_; }
    unsigned sigma_of(unsigned factor) const { return sigma_[factor]; }
    unsigned sigma_inv_of(unsigned factor) const { return sigma_inv_[factor]; }
    unsigned long root_order() const { return root_order_; }
    const GenPermMatrix& matrix(unsigned destination_factor) const {
        return mats_[destination_factor];
    }

    bool is_identity() const;
    std::string canonical_key() const;

    bool operator==(const MonomialAutomorphism& rhs) const;
    bool operator!=(const MonomialAutomorphism& rhs) const { return !(*this == rhs); }

  private:
    void normalize();

    Ambient amb_;
    std::vector<unsigned> sigma_;
    std::vector<unsigned> sigma_inv_;
    unsigned long root_order_;
    std::vector<GenPermMatrix> mats_;
};

MonomialAutomorphism compose(const MonomialAutomorphism& g, const MonomialAutomorphism& h);
MonomialAutomorphism inverse(const MonomialAutomorphism& g);
MonomialAutomorphism power(const MonomialAutomorphism& g, long e);

// Least k <= cap with g^k = id; throws if the cap is exceeded.
unsigned order_of(const MonomialAutomorphism& g, unsigned cap = 512);

struct FiniteActionGroup {
    std::vector<MonomialAutomorphism> elements;        // canonical generation order, [0] = id
    std::vector<std::vector<unsigned>> table;          // table[i][j] = index of elements[i] o elements[j]
    std::vector<unsigned> inverse;                     // index of the inverse of each element

    unsigned size() const { return static_cast<unsigned>(elements.size()); }
    std::optional<unsigned> index_of(const MonomialAutomorphism& g) const;
};

// Closure of the generators under composition, with multiplication table;
// deterministic element order. Throws when the closure exceeds the cap.
FiniteActionGroup generate_group(const std::vector<MonomialAutomorphism>& generators,
                                 unsigned cap = 512);

using NamedGenerators = std::map<std::string, MonomialAutomorphism>;

// Evaluates a word such as "g^2 h k^-1" (also "g*h", "ghk", "1") over the
// named generators. Multi-letter tokens resolve either as one generator name
// or as a juxtaposition of single-letter generator names.
MonomialAutomorphism evaluate_word(const Ambient& amb, const NamedGenerators& gens,
                                   const std::string& word);

// A relation is "word" (must equal the identity) or "lhs = rhs".
bool relation_holds(const Ambient& amb, const NamedGenerators& gens, const std::string& relation);

// True iff every relation holds; every named generator must belong to the group.
bool verify_relations(const FiniteActionGroup& group, const NamedGenerators& gens,
                      const std::vector<std::string>& relations);

// Burnside count |X/G| = (1/|G|) sum |Fix(g)|; fix_sizes indexed like
// group.elements. Throws when the average is not an integer.
Integer burnside_count(const FiniteActionGroup& group, const std::vector<Integer>& fix_sizes);

// A point with exactly one nonzero coordinate per factor (the entry scales
// to 1 projectively).
struct CoordinatePoint {
    std::vector<unsigned> coord;

    bool operator==(const CoordinatePoint&) const = default;
    auto operator<=>(const CoordinatePoint&) const = default;
};

// All coordinate points fixed by g, in lexicographic order.
std::vector<CoordinatePoint> fixed_coordinate_points(const MonomialAutomorphism& g);

}  // namespace cyq
