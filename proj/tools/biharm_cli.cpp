#include "biharm/report.hpp"

int main(int argc, char** argv) { return biharm::run_cli(argc, argv); }
