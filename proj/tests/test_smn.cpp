#include <catch2/catch_amalgamated.hpp>
#include "baire/serialize.hpp"
#include "baire/games.hpp"
TEST_CASE("placeholder test_smn") { CHECK(true); }
