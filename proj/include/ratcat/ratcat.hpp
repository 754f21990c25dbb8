#pragma once

#include "ratcat/bijection.hpp"
#include "ratcat/error.hpp"
#include "ratcat/paths.hpp"
#include "ratcat/qt_poly.hpp"
#include "ratcat/rank_words.hpp"
#include "ratcat/statistics.hpp"
