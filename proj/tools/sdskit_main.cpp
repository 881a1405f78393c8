#include "sdskit/catalog.hpp"

int main(int argc, char** argv) { return sdskit::run_cli(argc, argv); }
