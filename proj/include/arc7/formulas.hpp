// Registry of the closed-form census expressions, evaluated exactly.
//
// Every count the enumeration produces is checked against an entry here.
// Entries are data (coefficient lists over a rational prefactor) so tests
// and the CLI can iterate them generically. Three normalizations appear:
//   raw                      expected raw count == value
//   per_pgl                  expected raw count == value * |PGL(3,F_q)|
//   per_pgl_times_symmetry   raw count * symmetry_factor(lambda)
//                            == value * |PGL(3,F_q)|
// The last one matches the labeled-tuple bookkeeping the hand derivations
// use (a set of cycle type lambda has symmetry_factor(lambda) generator
// labelings), under which every normalized count is a polynomial in q.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arc7/bigint.hpp"

namespace arc7 {

BigInt pgl3_order(std::uint64_t q);

enum class Norm { raw, per_pgl, per_pgl_times_symmetry };

struct FormulaEntry {
    std::string key;               // "<operation>/<lambda>"
    std::string lambda;            // cycle type the count refers to
    Norm norm;
    std::vector<BigInt> poly;      // numerator coefficients, ascending degree
    BigInt den;                    // positive
    std::string anchor;            // one-line description of what is counted

    BigRat value_at(std::uint64_t q) const;
    // The raw count this entry predicts, given the symmetry factor of its
    // cycle type; must come out an integer at every prime power q.
    BigInt expected_raw(std::uint64_t q, std::uint64_t symmetry) const;
};

const std::vector<FormulaEntry>& formula_registry();
const FormulaEntry* find_formula(const std::string& key);

// Unordered |B_7^lambda| / |PGL| for the five cycle types with char-2 counts.
BigRat table1_value(const std::string& lambda, std::uint64_t q);

// Ordered 7-arc count of trivial cycle type: |PGL|-sized prefactor times the
// degree-4 bracket, with the Fano-correction term a(q) supplied by the
// caller (its direction is settled empirically by the harness, not here).
BigInt glynn_b7e(std::uint64_t q, int a_q);

// Exact lookup for the per-subset census expressions, e.g.
// delta_formula("4+2+1", "delta1", q). Throws if the pair is not registered.
BigRat delta_formula(const std::string& lambda, const std::string& subset, std::uint64_t q);

// Re-export of the stratum size recursion for registry consumers.
BigInt stratum_size(std::uint64_t q, int n);

// A function given by one polynomial per residue class of its argument.
struct QuasiPolynomial {
    struct Branch {
        std::vector<BigInt> poly;
        BigInt den;
    };
    unsigned period = 1;
    std::vector<Branch> branches;  // branches[i] applies when x % period == i

    BigRat evaluate(std::uint64_t x) const;
};

}  // namespace arc7
