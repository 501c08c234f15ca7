#pragma once

#include "hhc/ainfinity.hpp"

#include <memory>
#include <string>

namespace hhc {

// Window N keeps homological degrees 1, 0, ..., 1 - N.

// Unnormalized bar resolution; generator [a1|...|am] sits in degree 1 - m.
ComplexPtr bar_resolution(std::shared_ptr<const Algebra> A, int N);
// Word of a bar generator and the generator of a word (-1 when outside the window).
std::vector<int> bar_word(const Complex& bar, int g);
int bar_generator(const Complex& bar, const std::vector<int>& w);
// The signed deconcatenation diagonal on a bar complex; delta_{>=3} = 0.
AinftyStructure bar_structure(const ComplexPtr& P);

struct Preset {
  ComplexPtr P;
  AinftyStructure S;
};

// k[x]/(x^n) with one generator e_i in degree 1 - i and the closed-form delta family.
Preset xn_resolution(const Field& f, int n, int N);

// Complex from a JSON descriptor, validated.
ComplexPtr custom_resolution(const std::string& json_text, int N, const std::string& base_dir = ".");

// d^2 = 0, mu d = 0 and exactness of the augmented complex inside the window
// (per internal degree up to the truncation for truncated algebras).
// Throws NotExact or NotAugmented.
void validate_complex(const Complex& P);

// Degree-0 chain map F: P -> Q with mu_Q F = mu_P.
Map comparison_map(const ComplexPtr& P, const ComplexPtr& Q);

// f o F for a cochain f on Q.
Map transport(const Map& f, const Map& F);

}  // namespace hhc
