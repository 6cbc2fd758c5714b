#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "salemk3/algebraic.hpp"

namespace salemk3 {

// The trace side of a Salem number: the (monic irreducible) minimal
// polynomial of rho = lambda + 1/lambda, whose real roots are ordered
// tau_0 > 2 > tau_1 > ... > tau_{n-1} > -2, together with lambda itself,
// the root > 1 of the palindromic lift.
class SalemTrace {
  public:
    const IntPoly& trace_poly() const { return trace_poly_; }
    int trace_degree() const { return trace_poly_.degree(); }
    int degree() const { return 2 * trace_poly_.degree(); }  // of lambda
    const std::vector<AlgebraicReal>& roots() const { return roots_; }
    const AlgebraicReal& root(int j) const;  // tau_j, descending order
    const AlgebraicReal& rho() const { return roots_.front(); }
    const AlgebraicReal& salem_root() const { return lambda_; }
    IntPoly lift() const { return trace_lift(trace_poly_); }

    bool operator==(const SalemTrace& o) const { return trace_poly_ == o.trace_poly_; }
    bool operator!=(const SalemTrace& o) const { return !(*this == o); }

  private:
    friend class RecognizeResult;
    SalemTrace(IntPoly u, std::vector<AlgebraicReal> roots, AlgebraicReal lambda)
        : trace_poly_(std::move(u)), roots_(std::move(roots)), lambda_(std::move(lambda)) {}
    IntPoly trace_poly_;
    std::vector<AlgebraicReal> roots_;
    AlgebraicReal lambda_;
};

// Either an accepted SalemTrace or the name of the first failed test.
class RecognizeResult {
  public:
    bool ok() const { return trace_.has_value(); }
    const std::string& rejection() const { return rejection_; }
    const SalemTrace& value() const;  // InternalError if rejected

    static RecognizeResult accept(IntPoly u, std::vector<AlgebraicReal> roots,
                                  AlgebraicReal lambda);
    static RecognizeResult reject(std::string reason);

  private:
    RecognizeResult() = default;
    std::optional<SalemTrace> trace_;
    std::string rejection_;
};

RecognizeResult recognize_salem_trace(const IntPoly& u);
// Recognition that throws InputError (with the rejection reason) on failure.
SalemTrace require_salem_trace(const IntPoly& u);

// Trace of lambda^k: the minimal polynomial of H_k(rho), recognized.
SalemTrace power_trace(const SalemTrace& s, long k);

// rho = H_{k0}(rho0) with rho0 the trace of the primitive Salem number
// generating the power group of lambda inside its field.
struct PrimitiveDecomposition {
    SalemTrace rho0;
    long k0;
};
PrimitiveDecomposition primitive(const SalemTrace& sigma);

// Upper bound on k for which lambda^(1/k) could be a Salem number of the
// same degree, from the degree-uniform lower bound on log of the Mahler
// measure (any such number exceeds it, so k <= log(lambda)/bound).
long salem_power_bound(const SalemTrace& s);

// Exhaustive search bounds for the two-equation decomposition when
// q_rho > 2: j runs over 1..j0 and k over the divisors of k0, with
// H_{k0/k}(rho0) the unique candidate trace for each k.
struct Mdr2Bounds {
    long j0;
    long k0;
};
Mdr2Bounds mdr2_bounds(const SalemTrace& rho, const AlgebraicReal& q_rho);

// Box scan: every monic integer polynomial of degree `degree`/2 with
// |coefficients| <= coeff_bound that passes recognition, sorted by lambda.
std::vector<SalemTrace> enumerate_salem_candidates(int degree, const Int& coeff_bound);

// Complete ascending list of Salem traces of the given trace degree with
// rho <= rho_max; exhaustive relative to rho_max.  Works by descending the
// derivative chain: a polynomial with all roots in an interval has all its
// derivatives' roots there too, so integer coefficients can be enumerated
// level by level between sign conditions at the critical points.
std::vector<SalemTrace> salem_traces_up_to(int trace_degree, const Rat& rho_max);

// Catalog of Salem traces indexed by (degree of lambda, rank by size).
// Entries are tagged "explicit" (coefficients fixed externally) or
// "enumerated" (derived by salem_traces_up_to; `bound` records the rho_max
// relative to which the rank is certified).
class SalemCatalog {
  public:
    struct Entry {
        SalemTrace trace;
        std::string provenance;
        std::optional<Rat> bound;
    };

    SalemCatalog() = default;
    static SalemCatalog load(const std::string& path);
    // SALEMK3_CATALOG, else SALEMK3_DATA_DIR/salem_catalog.json, else
    // data/salem_catalog.json relative to the working directory.
    static std::string default_path();
    static const SalemCatalog& shared();

    bool contains(int d, int i) const;
    const Entry& entry(int d, int i) const;  // InputError if absent
    const SalemTrace& at(int d, int i) const { return entry(d, i).trace; }
    const std::map<std::pair<int, int>, Entry>& all() const { return entries_; }

  private:
    std::map<std::pair<int, int>, Entry> entries_;
};

}  // namespace salemk3
