#pragma once

#include "giant/bij.hpp"
#include "giant/codecs.hpp"
#include "giant/dag.hpp"
#include "giant/errors.hpp"
#include "giant/nat_core.hpp"
#include "giant/numtheory.hpp"
#include "giant/refnat.hpp"
#include "giant/tree.hpp"
