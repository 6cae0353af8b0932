#pragma once
// Umbrella header for the whole library.

#include "group_vector.hpp"
#include "monoid.hpp"
#include "ideal.hpp"
#include "systems.hpp"
#include "spectrum.hpp"
#include "universe.hpp"
#include "factor.hpp"
#include "classify.hpp"
#include "corpus.hpp"
#include "report.hpp"
