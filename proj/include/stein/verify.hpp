#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stein {

struct CheckResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what);
};

struct VerifyReport {
    std::string suite;
    int n = 0;
    std::vector<CheckResult> checks;

    bool ok() const;
    CheckResult& check(const std::string& name);
};

/// Hopf axioms in every basis: associativity, coassociativity, bimonoid
/// compatibility, antipode identities, pairing adjunction, basis round
/// trips, naturality. Exhaustive over basis vectors for n <= 3, seeded
/// random elements beyond.
VerifyReport verify_hopf(int n, std::uint32_t seed = 1);

/// Cone descriptions of the chamber functionals and of braid cone functions.
VerifyReport verify_duality(int n, std::uint32_t seed = 1);

/// Steinmann relations: satisfaction, rank identity, span, derivative
/// formula, cobracket transport and comb round trips.
VerifyReport verify_steinmann(int n, std::uint32_t seed = 1);

/// Dynkin elements against the EGS product, primitivity, relation
/// linearity, and the two Eulerian objects.
VerifyReport verify_dynkin(int n, std::uint32_t seed = 1);

} // namespace stein
