// Regenerates the shipped fixture documents: write_fixtures DIR
#include <iostream>

#include "tla/document.hpp"
#include "tla/fixtures.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: write_fixtures DIR\n";
        return 64;
    }
    try {
        for (const auto& f : tla::fixtures::all()) {
            tla::save_document(f.automaton, std::string(argv[1]) + "/" + f.file);
            std::cout << f.file << '\n';
        }
    } catch (const tla::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 66;
    }
    return 0;
}
