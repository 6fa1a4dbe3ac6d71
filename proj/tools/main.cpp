#include "liftfan/cli.hpp"

int main(int argc, char** argv) { return liftfan::run_cli(argc, argv); }
