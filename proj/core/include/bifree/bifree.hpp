#pragma once

#include "bifree/convolution.hpp"
#include "bifree/cumulants.hpp"
#include "bifree/error.hpp"
#include "bifree/fock.hpp"
#include "bifree/json_io.hpp"
#include "bifree/levy_hincin.hpp"
#include "bifree/limits.hpp"
#include "bifree/linalg.hpp"
#include "bifree/measures.hpp"
#include "bifree/partitions.hpp"
#include "bifree/random.hpp"
#include "bifree/scalar.hpp"
#include "bifree/series.hpp"
