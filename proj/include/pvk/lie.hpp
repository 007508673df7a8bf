// Free Lie rings over Z in the Lyndon basis, graded quotients by homogeneous
// relations, and the universal enveloping algebra as a tensor-algebra quotient.

#ifndef PVK_LIE_HPP
#define PVK_LIE_HPP

#include "pvk/intlinalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pvk {

/// A word over generators 0..n-1, one char per letter.
using LieWord = std::string;

std::uint64_t witt_number(std::uint64_t n, std::uint64_t d);

bool is_lyndon(const LieWord& w);
/// w = uv with v the longest proper Lyndon suffix.
std::pair<LieWord, LieWord> standard_factorization(const LieWord& w);

struct HallBasisElement {
    LieWord word;
    std::size_t degree() const { return word.size(); }
    /// Bracket tree from the standard factorization, e.g. [A1,[A1,B1]].
    std::string to_string(const std::vector<std::string>& names) const;
};

/// Lyndon words of length `degree` in lexicographic order.
std::vector<HallBasisElement> hall_basis(std::size_t num_gens, std::size_t degree);

/// Element of the associative tensor algebra.
using TensorElement = std::map<LieWord, Integer>;

class LieElement {
public:
    explicit LieElement(std::size_t num_gens = 0) : n_(num_gens) {}
    static LieElement generator(std::size_t num_gens, std::size_t g);
    static LieElement basis(std::size_t num_gens, const LieWord& lyndon);
    /// Lyndon coordinates of a tensor that is a Lie polynomial; throws otherwise.
    static LieElement from_tensor(std::size_t num_gens, TensorElement t);

    std::size_t num_gens() const { return n_; }
    const std::map<LieWord, Integer>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree if homogeneous, 0 for zero or mixed elements.
    std::size_t homogeneous_degree() const;
    TensorElement expand() const;

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement operator-() const;
    LieElement operator*(const Integer& k) const;
    bool operator==(const LieElement& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add(const LieWord& w, const Integer& c);
    std::size_t n_;
    std::map<LieWord, Integer> coeffs_;
};

LieElement bracket(const LieElement& x, const LieElement& y);

struct DegreeData {
    std::size_t degree = 0;
    std::size_t rank = 0;
    std::vector<Integer> torsion;
    bool operator==(const DegreeData&) const = default;
};

std::vector<std::size_t> ranks_of(const std::vector<DegreeData>& data);

/// Graded pieces 1..D of the free Lie ring on n generators modulo the ideal
/// generated by homogeneous relations.
std::vector<DegreeData> lie_quotient_dims(std::size_t num_gens, const std::vector<LieElement>& relations,
                                          std::size_t max_degree);
/// Degree-d part of the ideal, as Lyndon coordinates (rows) in degree d.
IntMatrix lie_ideal_component(std::size_t num_gens, const std::vector<LieElement>& relations, std::size_t d);

/// Graded pieces 0..D of T(V) modulo the two-sided ideal generated by the
/// tensor expansions of the relations.
std::vector<DegreeData> enveloping_dims(std::size_t num_gens, const std::vector<LieElement>& relations,
                                        std::size_t max_degree);

/// Coefficients u_0..u_D of prod_k (1 - t^k)^(-l_k).
std::vector<Integer> pbw_series(const std::vector<std::size_t>& lie_dims, std::size_t max_degree);
/// lie_dims = l_1..l_D, env_dims = u_0..u_D.
bool pbw_consistency(const std::vector<std::size_t>& lie_dims, const std::vector<std::size_t>& env_dims);

/// A1, B1, A2, B2, C1, C2.
std::vector<std::string> pv3_lie_names();
std::vector<LieElement> pv3_lie_relations();
/// The same relations with C2 dropped (five generators).
std::vector<LieElement> g3_lie_relations();

struct DerivationReport {
    LieElement d_a1b1, d_a2b2;      // images of the two relations
    bool a1b1_in_ideal = false;
    bool a2b2_in_ideal = false;
    bool generator_images_match = false; // d(B1) = [A2,B1] etc.
    bool holds() const { return a1b1_in_ideal && a2b2_in_ideal && generator_images_match; }
};
/// d(A1) = [B2,A1], d(B1) = [A2,B1], d(A2) = [B1,A2], d(B2) = [A1,B2] on
/// L(A1,B1,A2,B2) / ([A1,B1],[A2,B2]).
DerivationReport derivation_check();

} // namespace pvk

#endif
