#include <catch2/catch_amalgamated.hpp>
TEST_CASE("placeholder ringmod_test") { CHECK(true); }
