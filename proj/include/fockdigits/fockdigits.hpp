#ifndef FOCKDIGITS_FOCKDIGITS_HPP
#define FOCKDIGITS_FOCKDIGITS_HPP

#include "fockdigits/base_change.hpp"
#include "fockdigits/error.hpp"
#include "fockdigits/linear_operator.hpp"
#include "fockdigits/multiboson.hpp"
#include "fockdigits/register.hpp"
#include "fockdigits/serialize.hpp"
#include "fockdigits/state.hpp"
#include "fockdigits/tolerances.hpp"
#include "fockdigits/translation.hpp"

#endif  // FOCKDIGITS_FOCKDIGITS_HPP
