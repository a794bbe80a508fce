#include <algorithm>
#include <map>
#include <numeric>

#include "powfrac/analyze.hpp"
#include "powfrac/error.hpp"

namespace powfrac::analyze {

namespace {

constexpr std::string_view kModule = "analyze";

long reduce(const mpz_class& v, long L) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(L));
    return r.get_si();
}

}  // namespace

PeriodReport pure_period_mod(const std::vector<mpz_class>& A, const std::vector<mpz_class>& init, long L, long scan) {
    if (init.empty() || A.size() != init.size()) {
        throw Error(ErrorKind::BadInput, kModule, "need d recurrence coefficients and d initial values");
    }
    if (A.front() == 0) throw Error(ErrorKind::BadInput, kModule, "A_0 must be non-zero");
    if (L < 1 || L > (1L << 31)) throw Error(ErrorKind::BadInput, kModule, "modulus must lie in [1, 2^31]");
    const std::size_t d = init.size();
    std::vector<long> coeff(d), state(d);
    for (std::size_t i = 0; i < d; ++i) {
        coeff[i] = reduce(A[i], L);
        state[i] = reduce(init[i], L);
    }
    std::map<std::vector<long>, long> seen;
    for (long k = 0; k <= scan; ++k) {
        auto [it, inserted] = seen.emplace(state, k);
        if (!inserted) {
            PeriodReport r;
            r.preperiod = it->second;
            r.period = k - it->second;
            r.pure = r.preperiod == 0;
            r.modulus = L;
            mpz_class g;
            mpz_gcd_ui(g.get_mpz_t(), A.front().get_mpz_t(), static_cast<unsigned long>(L));
            r.lemma_violation = g == 1 && !r.pure;
            return r;
        }
        long nv = 0;
        for (std::size_t i = 0; i < d; ++i) nv = (nv + (L - coeff[i]) % L * state[i]) % L;
        std::rotate(state.begin(), state.begin() + 1, state.end());
        state.back() = nv;
    }
    throw Error(ErrorKind::BadInput, kModule, "no repeated state within " + std::to_string(scan) + " steps");
}

std::optional<UltimatePeriod> ultimate_period_scan(const std::vector<mpz_class>& seq, long max_t) {
    const long len = static_cast<long>(seq.size());
    max_t = std::min(max_t, (len - 1) / 2);
    for (long t = 1; t <= max_t; ++t) {
        long last_mismatch = 0;
        for (long n = len - t; n >= 1; --n) {
            if (seq[static_cast<std::size_t>(n - 1)] != seq[static_cast<std::size_t>(n - 1 + t)]) {
                last_mismatch = n;
                break;
            }
        }
        const long start = last_mismatch + 1;
        const long tail = len - start + 1;
        if (2 * tail >= len && tail >= 2 * t) return UltimatePeriod{t, start};
    }
    return std::nullopt;
}

}  // namespace powfrac::analyze
