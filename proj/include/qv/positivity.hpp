#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qv/gsum.hpp"
#include "qv/record.hpp"

namespace qv {

// One cell of the positivity domain: the G parameters plus where it came
// from (the raw domain enumeration or one of the instance generators).
struct ConjectureCell {
    GParams g;
    std::string origin;
    std::map<std::string, long> extra;  // generator parameters (v, i, ...)
};

// Membership predicate for the conjectured polytope, in the scaled integer
// variables aK = alpha*K, bK = beta*K:
//   K <= aK+bK <= 2K^2-K  and  bK-K^2 <= K*(N-M) <= K^2-aK,
// with both chains strict when K = 2.
bool conjecture_member(long N, long M, long aK, long bK, long K);

// All member cells with K in [Klo,Khi], N in [Nlo,Nhi], M in [Mlo,Mhi],
// ordered by (K, N, M, aK, bK) ascending.
std::vector<ConjectureCell> enumerate_domain(long Klo, long Khi, long Nlo,
                                             long Nhi, long Mlo, long Mhi);

// The generator families. Ids: POS-FQ (v,i,L), POS-T11 (v,Delta,L),
// POS-N17 (v,Delta,L), POS-ODD (v,L), POS-EVEN (v,L),
// POS-CHAIN-C (v,n,L), POS-CHAIN-T (v,Delta,n,L), POS-CHAIN-N (v,Delta,n,L).
// Throws std::invalid_argument on an unknown id or out-of-range parameters.
GParams instance_gparams(const std::string& id,
                         const std::map<std::string, long>& p);

const std::vector<std::string>& generator_ids();

// NonNegative / NegativeCoefficient verdict for one cell; family is the
// cell's origin and params are K,N,M,aK,bK plus any generator extras.
VerificationRecord check_cell(const ConjectureCell& cell);

// Checkpoint lines: "K N M aK bK verdict". Unparseable lines are skipped.
std::string checkpoint_key(const GParams& g);
std::string checkpoint_line(const GParams& g, Status s);
std::set<std::string> load_checkpoint(std::istream& in);

}  // namespace qv
