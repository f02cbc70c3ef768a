#include "cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
	return incalg::cli::main(argc, argv, std::cout, std::cerr);
}
