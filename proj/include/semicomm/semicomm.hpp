#pragma once

#include "semicomm/commutator.hpp"
#include "semicomm/congruence.hpp"
#include "semicomm/errors.hpp"
#include "semicomm/group.hpp"
#include "semicomm/linked_triple.hpp"
#include "semicomm/partition.hpp"
#include "semicomm/rees.hpp"
#include "semicomm/semigroup.hpp"
#include "semicomm/series.hpp"
#include "semicomm/suite.hpp"
