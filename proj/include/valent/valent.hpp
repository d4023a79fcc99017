#pragma once

#include "valent/catalog.hpp"
#include "valent/characterize.hpp"
#include "valent/dot.hpp"
#include "valent/error.hpp"
#include "valent/graph.hpp"
#include "valent/graph6.hpp"
#include "valent/laplacian.hpp"
#include "valent/search.hpp"
#include "valent/serialize.hpp"
#include "valent/spectrum.hpp"
#include "valent/transforms.hpp"
