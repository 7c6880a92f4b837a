#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "beerpath/proper_interval.hpp"

namespace beerpath {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_100;

BigInt binomial(unsigned n, unsigned k);
BigInt catalan(unsigned n);

// Dyck paths of semilength n as endpoint strings ('0' = up step = left
// endpoint), in lexicographic order. Irreducible paths touch zero only at
// both ends (connected graphs). Raises too_large for n > 16.
void for_each_dyck(unsigned n, bool irreducible_only, const std::function<void(const std::string&)>& f);
std::vector<std::string> dyck_paths(unsigned n, bool irreducible_only = false);

// Block sizes in level order and the weight prod(k_i + 1).
struct TwinClasses {
  std::vector<std::vector<Vertex>> blocks;
  BigInt weight = 1;

  std::vector<std::uint32_t> sizes() const;
};

// Blocks of the distance tree of a connected graph. The root is moved under a
// dummy root, ahead of its own children; a vertex joins the previous block
// when it is a leaf with the same parent.
TwinClasses twin_blocks(const ProperIntervalGraph& g);
// Same rule on the ordered forest a Dyck path encodes, forest roots as
// siblings. Nodes are numbered in level order.
TwinClasses forest_blocks(std::string_view dyck);

// Weighted counts: cbar(n) sums forest weights over all Dyck paths of semilength n.
struct Series {
  std::vector<BigInt> cbar, lbar, rbar;
};
Series weighted_series(unsigned max_n);                        // the L/R/C recurrences
std::vector<BigInt> weighted_series_gf(unsigned max_n);        // coefficients of (2x - x^2) f^2 - f + 1 = 0
std::vector<BigInt> weighted_series_direct(unsigned max_n);    // brute force, max_n <= 14
BigFloat ratio(const BigInt& num, const BigInt& den);
BigFloat growth_constant();  // 4 + 2 sqrt 3

// Block compositions of a proper endpoint string. Gap i sits between
// vertices i and i + 1; R_l (R_r) holds the gaps not cut between two blocks
// of left (right) endpoints.
struct CompositionRepr {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> r_left, r_right, r_both;
  std::vector<std::pair<Vertex, Vertex>> cliques;  // maximal cliques as vertex ranges
  std::vector<std::vector<Vertex>> twins;          // classes of size >= 2
  BigInt weight = 1;                               // prod over all classes of (size + 1)

  std::string endpoints() const;  // '0' = left
};
// `flip` reads '1' as left.
CompositionRepr composition_from_endpoints(std::string_view s, bool flip = false);
// Raises dyck_violation if some prefix has more R_r gaps than R_l gaps.
CompositionRepr composition_from_sets(std::uint32_t n, std::vector<std::uint32_t> r_left,
                                      std::vector<std::uint32_t> r_right);

// sum_x sum_y binom(n,x) binom(n-x,2y) C_y
BigInt catalan_identity_rhs(unsigned n);
// |S_{x,y}| over n gaps (n + 1 vertices).
BigInt sxy_formula(unsigned n, unsigned x, unsigned y);
// [x][y] table of |S_{x,y}| by listing every (R_l, R_r) pair; n <= 12.
std::vector<std::vector<std::uint64_t>> sxy_enumerated(unsigned n);

// h(k): sum over compositions of k of prod(p_i + 1).
std::vector<std::uint64_t> h_enumerated(unsigned k_max);  // k_max <= 32
std::vector<BigInt> h_recurrence(unsigned k_max);
BigInt h_closed_form(unsigned k);  // k >= 1

// Twin-weight sum over all proper endpoint strings on n + 1 vertices,
// grouped by the 2y gaps outside R_I: sum_y C_y [x^{n+1}] H(x)^{2y+1}.
std::vector<BigInt> census(unsigned max_n);

// f(n, x): mean twin weight over the pairs in S_{x,y}, all y. n <= 12.
struct FnxRow {
  unsigned n = 0, x = 0;
  std::uint64_t pairs = 0;
  BigRational mean;
  BigRational lower, upper;  // 2^n (1/2)^x and 2^n (3/4)^x
};
std::vector<FnxRow> fnx_table(unsigned n);

}  // namespace beerpath
