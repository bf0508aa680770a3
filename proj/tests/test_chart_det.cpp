#include <doctest.h>
#include "coad/io.hpp"

TEST_CASE("placeholder chart_det") { CHECK(true); }
