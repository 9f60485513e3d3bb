#pragma once

#include "klschubert/polynomial.hpp"
#include "klschubert/field.hpp"
#include "klschubert/weyl.hpp"
#include "klschubert/ring.hpp"
#include "klschubert/klpoly.hpp"
#include "klschubert/twisted.hpp"
#include "klschubert/linalg.hpp"
#include "klschubert/hecke.hpp"
#include "klschubert/localization.hpp"
#include "klschubert/hyperbolic.hpp"
#include "klschubert/billey.hpp"
#include "klschubert/temperley_lieb.hpp"
#include "klschubert/context.hpp"
#include "klschubert/checks.hpp"
#include "klschubert/golden.hpp"
#include "klschubert/serialize.hpp"
