#ifndef ARGCOUNT_ARGCOUNT_HPP_
#define ARGCOUNT_ARGCOUNT_HPP_

#include "arg_set.hpp"
#include "axioms.hpp"
#include "boolean.hpp"
#include "convergence.hpp"
#include "counting.hpp"
#include "extensions.hpp"
#include "framework.hpp"
#include "generate.hpp"
#include "io.hpp"
#include "ranking.hpp"

#endif // ARGCOUNT_ARGCOUNT_HPP_
