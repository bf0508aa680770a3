#include <doctest.h>
#include "coad/io.hpp"

TEST_CASE("placeholder spectra") { CHECK(true); }
