#pragma once

#include "hhc/ainfinity.hpp"
#include "hhc/koszul.hpp"

#include <string>

namespace hhc {

std::string read_file(const std::string& path);

// {"field": "Q" | {"Fp": p}, "basis": [...], "unit": label, "mul": [[i, j, [[k, "c"], ...]], ...],
//  "grading": [...], "truncation": D}
Algebra parse_algebra(const std::string& json_text);
std::string dump_algebra(const Algebra& A);

// {"algebra": object or path, "generators": {"1": [...], "0": [...]}, "internal": {label: t},
//  "differential": {label: [["c", a, target, b], ...]}, "augmentation": {label: [["c", a], ...]}}
// Unlisted generators are absent; the window is 1 - N.
ComplexPtr parse_complex(const std::string& json_text, int N, const std::string& base_dir = ".");
std::string dump_complex(const Complex& P);

// {"arity": n, "degree": k, "values": {generator: [["c", a0, g1, a1, ...], ...]}}
std::string dump_map(const Map& f);
Map parse_map(const ComplexPtr& P, const std::string& json_text);

// {"complex": name, "max_n": N, "exact_tail": bool, "deltas": {"2": map, ...}}
std::string dump_structure(const AinftyStructure& S);

// {"field": ..., "generators": [...], "relations": [[["c", i, j], ...], ...]}
QuadraticData parse_quadratic(const std::string& json_text);

}  // namespace hhc
