#pragma once

#include "nk6/sampling.hpp"

namespace nk6 {
namespace testing = sampling;
}
