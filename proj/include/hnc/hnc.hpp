#ifndef HNC_HNC_HPP
#define HNC_HNC_HPP

#include "hnc/bernoulli_mod.hpp"
#include "hnc/catalog.hpp"
#include "hnc/cli.hpp"
#include "hnc/context.hpp"
#include "hnc/errors.hpp"
#include "hnc/eval.hpp"
#include "hnc/expr.hpp"
#include "hnc/identities.hpp"
#include "hnc/parse.hpp"
#include "hnc/rational.hpp"
#include "hnc/residue.hpp"
#include "hnc/verify.hpp"

#endif
