#pragma once

// Umbrella header for the lattice verification toolkit: covariant Hamiltonian
// Yang-Mills field theory in antisymmetrized-jet coordinates on a periodic
// torus, with the (3+3) triad / spin-connection dictionary.

#include "jetfield/algebra.hpp"
#include "jetfield/connection.hpp"
#include "jetfield/dynamics.hpp"
#include "jetfield/fields.hpp"
#include "jetfield/gauge.hpp"
#include "jetfield/lattice.hpp"
#include "jetfield/multimomentum.hpp"
#include "jetfield/triad.hpp"
