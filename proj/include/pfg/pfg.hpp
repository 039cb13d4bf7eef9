#pragma once

// Umbrella header.

#include "pfg/algebra.hpp"
#include "pfg/classify.hpp"
#include "pfg/core.hpp"
#include "pfg/gen.hpp"
#include "pfg/io.hpp"
#include "pfg/morph.hpp"
#include "pfg/self_complement.hpp"
