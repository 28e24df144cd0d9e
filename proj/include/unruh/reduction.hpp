#pragma once

#include <string>
#include <vector>

#include "unruh/states.hpp"

namespace unruh {

enum class Provenance { oracle, closed_form };

// Marks a closed-form entry whose published coefficient had to be corrected
// (the correction is derived from limits of the construction and confirmed by
// the trace oracle).
struct CorrectionNote {
  int row = 0;
  int col = 0;  // (row, col) and (col, row) are both affected when row != col
  std::string note;
};

// 8x8 state of Alice + Bob's region-I modes, basis |a,p,m> with index
// a*4 + p*2 + m.
struct ReducedState {
  DensityMatrix rho;
  Provenance provenance = Provenance::oracle;
  std::vector<CorrectionNote> corrections;  // closed_form only
};

// Partial trace over the region-II modes (q, n).
//
// The label |pqmn> interleaves the two wedges, so rewriting it as a product
// over regions crosses the fermionic q and m modes:
//     |pqmn> = (-1)^(q*m) |pm>_I |qn>_II .
// Tracing region II therefore carries the unweaving signs:
//     rho8[(a,p,m),(a',p',m')] =
//         sum_{q,n} (-1)^(q*(m+m')) rho32[(a,p,q,m,n),(a',p',q,m',n)] .
// Dropping the sign flips the |011><110|-type coherences and with them the
// whole amplification phenomenology, so it is load-bearing.
ReducedState trace_out_region_II(const DensityMatrix& rho32);

// The reduced matrices written out as explicit coefficient formulas — an
// implementation independent of the trace path, used to cross-validate it.
// Defined for phi_plus, phi_star, werner and werner_like (phi_minus has no
// published closed form; its negativity is checked against phi_plus instead).
// Entries whose published coefficients failed their own limits are corrected
// and flagged in `corrections`.
ReducedState closed_form_reduced(Family kind, const StateParams& params);

// max_ij |a_ij - b_ij|; rejects dimension mismatches.
double compare_reduced(const ReducedState& a, const ReducedState& b);

// Dump format: one header line naming the basis order, then 8 rows of 8
// values with 15 significant digits, then provenance and correction flags.
std::string dump_reduced(const ReducedState& state);

}  // namespace unruh
