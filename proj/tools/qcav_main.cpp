#include "qcav/cli.hpp"

int main(int argc, char** argv) {
    return qcav::cli::run(argc, argv);
}
