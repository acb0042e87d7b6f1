#include "cli.hpp"

int main(int argc, char** argv)
{
    return densityseek::cli::run(argc, argv);
}
