#include <doctest.h>

#include <sstream>

#include "giant/cli.hpp"
#include "support.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = giant::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Success with exactly `expected` on stdout.
void check_prints(std::vector<std::string> args, const std::string& expected) {
    const Result r = run(std::move(args));
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == expected);
}

// Failure with a single diagnostic line.
void check_fails(std::vector<std::string> args) {
    const Result r = run(std::move(args));
    CHECK(r.code != 0);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

} // namespace

TEST_CASE("convert") {
    check_prints({"convert", "dec", "tree", "42"}, "W (V T []) [T,T,T]\n");
    check_prints({"convert", "dec", "bij", "42"}, "oioii\n");
    check_prints({"convert", "tree", "dec", "V (W (V T [T]) []) []"}, "170141183460469231731687303715884105727\n");
    check_prints({"convert", "bij", "tree", "oioii"}, "W (V T []) [T,T,T]\n");
    check_prints({"convert", "bij", "dec", "e"}, "0\n");
    check_fails({"convert", "dec", "tree", "4x2"});
    check_fails({"convert", "tree", "dec", "V T"});
    check_fails({"convert", "hex", "dec", "1"});
    check_fails({"convert", "dec", "tree"});
}

TEST_CASE("convert round trips") {
    for (std::uint64_t k = 0; k <= 10000; k += (k < 300 ? 1 : 97)) {
        const std::string dec = std::to_string(k);
        for (const char* fmt : {"tree", "bij"}) {
            const Result there = run({"convert", "dec", fmt, dec});
            REQUIRE(there.code == 0);
            const std::string text = there.out.substr(0, there.out.size() - 1);
            REQUIRE(run({"convert", fmt, "dec", text}).out == dec + "\n");
        }
    }
}

TEST_CASE("special") {
    check_prints({"special", "mersenne", "43112609", "--output", "bitsize"}, "43112609\n");
    check_prints({"special", "mersenne", "43112609", "--output", "nodes"}, "6\n");
    check_prints({"special", "perfect", "43112609", "--output", "nodes"}, "7\n");
    check_prints({"special", "fermat", "11", "--output", "tree"}, "V T [T,V T [W T [V T []]]]\n");
    check_prints({"special", "perfect", "3", "--output", "dec"}, "28\n");
    check_prints({"special", "mersenne", "127", "--output", "dec"}, "170141183460469231731687303715884105727\n");
    check_fails({"special", "perfect", "1"});
    check_fails({"special", "mersenne", "43112609", "--output", "dec"});
    check_fails({"special", "mersenne", "200", "--output", "dec", "--max-dec-bits", "100"} );
    check_prints({"--max-dec-bits", "300", "special", "mersenne", "200", "--output", "dec"},
                 giant::oracle_sub(giant::oracle_exp2(200), giant::RefNat(1)).to_decimal() + "\n");
    check_fails({"special", "square", "3"});
    const Result dot = run({"special", "mersenne", "43112609", "--output", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph giant {\n", 0) == 0);
}

TEST_CASE("encode and decode") {
    const std::string giant_set = "W (V T []) [V T [T,W T [],T],T,V T [V T [],T],T,V T [W T [],T,T]]";
    check_prints({"encode", "set", "1,100,123,234", "--rep", "tree"}, giant_set + "\n");
    check_prints({"decode", "set", giant_set, "--rep", "tree"}, "1,100,123,234\n");
    check_prints({"encode", "set", "1,4,6,7,10", "--rep", "dec"}, "1234\n");
    check_prints({"encode", "set", "1,4,6,7,10"}, "1234\n");
    check_prints({"decode", "set", "1234"}, "1,4,6,7,10\n");
    check_prints({"encode", "list", "1,1,1"}, "42\n");
    check_prints({"decode", "mset", "42"}, "1,2,3\n");
    check_prints({"encode", "list", "1,1,1", "--rep", "bij"}, "oioii\n");
    check_prints({"encode", "set", ""}, "0\n");
    check_prints({"decode", "list", "0"}, "\n");
    check_fails({"encode", "set", "4,1"});
    check_fails({"encode", "mset", "3,2"});
    check_fails({"encode", "set", "1,,2"});
}

TEST_CASE("bits") {
    check_prints({"bits", "and", "12", "10"}, "8\n");
    check_prints({"bits", "or", "5", "2"}, "7\n");
    check_prints({"bits", "xor", "6", "3"}, "5\n");
    check_prints({"bits", "dif", "13", "6"}, "9\n");
    check_prints({"bits", "ite", "12", "10", "6"}, "10\n");
    check_prints({"bits", "not", "4", "5"}, "10\n");
    check_fails({"bits", "not", "2", "5"});
    check_fails({"bits", "and", "1"});
    check_fails({"bits", "nand", "1", "2"});
}

TEST_CASE("dot") {
    check_prints({"dot", "0"}, "digraph giant {\nn0 [label=\"T\"]\n}\n");
    const Result r = run({"dot", "W (V T []) [T,T,T]", "--from", "tree"});
    CHECK(r.code == 0);
    CHECK(r.out == run({"dot", "42"}).out);
}

TEST_CASE("workloads") {
    check_prints({"nsyr", "7"}, "7,11,17,26,2,0\n");
    check_prints({"nsyr", "0", "--rep", "b"}, "0\n");
    check_prints({"primes", "5"}, "2,3,5,7,11\n");
    check_prints({"primes", "5", "--rep", "n"}, "2,3,5,7,11\n");
    check_prints({"ack", "3", "5"}, "253\n");
    check_prints({"ack", "3", "5", "--rep", "b"}, "253\n");
    check_fails({"ack", "3"});
    check_fails({"primes", "5", "--rep", "x"});
}

TEST_CASE("bench") {
    const Result ack = run({"bench", "ack", "--rep", "n"});
    CHECK(ack.code == 0);
    CHECK(ack.out.rfind("ack n ", 0) == 0);
    CHECK(ack.out.ends_with(" 1021\n"));
    check_prints({"bench", "bitsize45", "--rep", "n"}, "bitsize45 n ?\n");
    check_prints({"bench", "bitsize45", "--rep", "b"}, "bitsize45 b ?\n");
    const Result e = run({"bench", "exp2", "--rep", "t"});
    CHECK(e.code == 0);
    CHECK(e.out.rfind("exp2 t ", 0) == 0);
    CHECK(e.out.ends_with(" 16384\n"));
    const Result b45 = run({"bench", "bitsize45", "--rep", "t"});
    CHECK(b45.out.ends_with(" 43112609\n"));
    check_fails({"bench", "nope"});
    check_fails({"bench", "ack", "--rep", "z"});
}

TEST_CASE("usage") {
    check_fails({});
    check_fails({"frobnicate"});
    const Result help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("convert") != std::string::npos);
}
