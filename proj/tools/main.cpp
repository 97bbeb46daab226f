#include "weylinv/cli.hpp"

int main(int argc, char** argv) { return weylinv::run(argc, argv); }
