#ifndef CQDISCORD_CQDISCORD_HPP
#define CQDISCORD_CQDISCORD_HPP

#include "cqdiscord/channels.hpp"
#include "cqdiscord/correlations.hpp"
#include "cqdiscord/errors.hpp"
#include "cqdiscord/qmat.hpp"
#include "cqdiscord/simplex.hpp"
#include "cqdiscord/states.hpp"

#endif  // CQDISCORD_CQDISCORD_HPP
