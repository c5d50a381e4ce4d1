#pragma once

// Linear algebra over Z/4 built on the Howell normal form.
//
// A Howell form of a row span is an echelon form whose pivots are 1 or 2,
// entries above a pivot are reduced modulo that pivot, and for every column c
// the rows with pivot >= c span exactly the span elements vanishing on
// columns < c. That last property makes the form unique, so two spans are
// equal iff their Howell forms are identical.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace negaz4 {

using Z4Vector = std::vector<std::uint8_t>;

// Index of the first nonzero entry, or v.size() for the zero vector.
std::size_t leading_index(std::span<const std::uint8_t> v);

// Howell form of the span of rows (each of length cols). Zero rows dropped.
std::vector<Z4Vector> howell_form(std::vector<Z4Vector> rows, std::size_t cols);

// Greedy reduction of v against a Howell form; returns the residue, which is
// zero iff v lies in the span.
Z4Vector howell_reduce(const std::vector<Z4Vector>& howell, Z4Vector v);

// Solves sum_j x_j * columns[j] = rhs over Z/4. Returns one solution.
std::optional<Z4Vector> solve_z4(const std::vector<Z4Vector>& columns, const Z4Vector& rhs);

// Howell form of {x in (Z/4)^vars : equations * x = 0}; each equation is a
// row of length vars.
std::vector<Z4Vector> kernel_z4(const std::vector<Z4Vector>& equations, std::size_t vars);

}  // namespace negaz4
