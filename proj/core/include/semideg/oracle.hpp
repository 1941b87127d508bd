#pragma once

#include <span>
#include <vector>

#include "semideg/graph.hpp"

namespace semideg {

// Permutation-level brute force, kept deliberately naive so it can serve as
// an independent reference for the search code. Every function throws
// Error{kBudgetExceeded} when n > kOracleMaxOrder.
inline constexpr std::size_t kOracleMaxOrder = 9;

bool oracle_hamiltonian_cycle(const OrientedGraph& g);
bool oracle_hamiltonian_path(const OrientedGraph& g, Vertex from, Vertex to);
// Tries every vertex permutation cut into consecutive blocks of the given
// lengths.
bool oracle_cycle_factor(const OrientedGraph& g, std::span<const std::size_t> lengths);
// Every Hamiltonian cycle, each listed once starting at vertex 0.
std::vector<std::vector<Vertex>> oracle_hamiltonian_cycles(const OrientedGraph& g);
// Some Hamiltonian cycle meets seq in cyclic order.
bool oracle_k_ordered(const OrientedGraph& g, std::span<const Vertex> seq);

}  // namespace semideg
