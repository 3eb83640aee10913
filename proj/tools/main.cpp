#include "netid/cli.hpp"

int main(int argc, char** argv) {
    return netid::cli::run(argc, argv);
}
