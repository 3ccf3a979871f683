// Compiles the amalgamated Catch2 implementation (including its default
// main) once into a static library that every test executable links.
#include <catch2/catch_amalgamated.cpp>
