// qb_main.cpp — Thin launcher for the qb command-line interface.

#include <qbsim/cli.hpp>

int main(int argc, char** argv) { return qb::cli::run(argc, argv); }
