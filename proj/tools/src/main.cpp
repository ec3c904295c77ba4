#include "qchan/cli.hpp"

int main(int argc, char** argv) {
    return qchan::cli::run(argc, argv);
}
