#include <catch2/catch_amalgamated.hpp>
TEST_CASE("placeholder supports_test") { CHECK(true); }
