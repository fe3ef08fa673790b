#pragma once

// Arbitrary-precision naturals and the number-theoretic codings everything
// else sits on: Cantor pairing, bijective base-k digit strings, and the
// sequence coding used by the program numbering.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace insep {

using Nat = boost::multiprecision::cpp_int;

// Cantor pairing <a,b> = (a+b)(a+b+1)/2 + b, a bijection N^2 -> N.
Nat pair(const Nat& a, const Nat& b);
Nat proj0(const Nat& n);
Nat proj1(const Nat& n);
void unpair(const Nat& n, Nat& a, Nat& b);

// Right-nested tuples: tuple(x,y,z) = <x,<y,z>>.
Nat tuple(const std::vector<Nat>& xs);
std::vector<Nat> untuple(const Nat& n, std::size_t arity);

// Bijective base-k numerals, digits in {1..k}, most significant first.
// 0 is the empty string. Total bijection between N and {1..k}*.
std::vector<int> to_bijective(const Nat& n, int base);
Nat from_bijective(const std::vector<int>& digits, int base);

// Sequence coding: a total bijection between N and finite sequences of
// naturals with code size linear in the total bit size of the entries.
// The code's bijective base-3 digit string is the concatenation of the
// entries' bijective base-2 strings separated by digit 3; a one-entry
// sequence [v] is the base-2 string of v+1 so it cannot collide with
// the empty sequence (code 0).
Nat encode_seq(const std::vector<Nat>& items);
std::vector<Nat> decode_seq(const Nat& code);

// Number of entries without materializing them.
std::uint64_t seq_length(const Nat& code);

std::string nat_str(const Nat& n);

}  // namespace insep
