#ifndef GOURSAT_GOURSAT_HPP
#define GOURSAT_GOURSAT_HPP

#include <goursat/blowup.hpp>
#include <goursat/checks.hpp>
#include <goursat/errors.hpp>
#include <goursat/invariants.hpp>
#include <goursat/parse.hpp>
#include <goursat/puiseux.hpp>
#include <goursat/rational.hpp>
#include <goursat/serialization.hpp>
#include <goursat/series.hpp>
#include <goursat/tower.hpp>
#include <goursat/word.hpp>

#endif
