#include "giant/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "giant/bench.hpp"
#include "giant/giant.hpp"

namespace giant::cli {

namespace {

constexpr std::uint64_t default_max_dec_bits = 1'000'000;

// Raised for input that is well formed but refused by policy.
struct Refusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Tree read_value(std::string_view format, const std::string& text) {
    if (format == "dec")
        return tree_from_refnat(RefNat::parse_decimal(text));
    if (format == "bij")
        return view<Tree>(BijDigits::parse(text));
    return parse_tree(text);
}

// Refuses to materialize digits of values wider than `max_bits`.
void check_width(const Tree& x, std::uint64_t max_bits) {
    if (cmp(bitsize_fast(x), tree_of(max_bits)) > 0)
        throw Refusal("refusing to expand a value wider than " + std::to_string(max_bits) +
                      " bits (raise --max-dec-bits to allow it)");
}

std::string write_value(std::string_view format, const Tree& x, std::uint64_t max_bits) {
    if (format == "tree")
        return print_tree(x);
    check_width(x, max_bits);
    if (format == "bij")
        return view<BijDigits>(x).to_string();
    return refnat_from_tree(x).to_decimal();
}

std::string decimal(const Tree& x) {
    return refnat_from_tree(x).to_decimal();
}

template <Natural N>
std::string join(const std::vector<N>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k > 0)
            out += ',';
        out += view<RefNat>(xs[k]).to_decimal();
    }
    return out;
}

// "a,b,c" of decimals; the empty string is the empty list.
std::vector<Tree> read_elements(const std::string& text) {
    std::vector<Tree> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        out.push_back(tree_from_refnat(RefNat::parse_decimal(text.substr(start, comma - start))));
        if (comma == std::string::npos)
            return out;
        start = comma + 1;
    }
}

std::uint64_t read_u64(const std::string& text) {
    return to_u64(RefNat::parse_decimal(text));
}

// Runs body on the representation named by rep.
template <class Body>
void with_rep(char rep, Body&& body) {
    switch (rep) {
    case 't': body(Tree{}); break;
    case 'b': body(BijDigits{}); break;
    default: body(RefNat{}); break;
    }
}

const std::vector<std::string> formats = {"dec", "tree", "bij"};
const std::vector<std::string> reps = {"t", "b", "n"};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arithmetic on giant numbers in hereditarily compressed bijective base-2", "giant"};
    app.require_subcommand(1);
    std::uint64_t max_dec_bits = default_max_dec_bits;
    app.add_option("--max-dec-bits", max_dec_bits, "Widest value printed as digits")
        ->capture_default_str();

    std::function<void()> action;

    {
        auto* sc = app.add_subcommand("convert", "Convert a value between formats");
        auto from = std::make_shared<std::string>();
        auto to = std::make_shared<std::string>();
        auto value = std::make_shared<std::string>();
        sc->add_option("from", *from, "Input format")->required()->check(CLI::IsMember(formats));
        sc->add_option("to", *to, "Output format")->required()->check(CLI::IsMember(formats));
        sc->add_option("value", *value, "Value text")->required();
        sc->callback([&, from, to, value] {
            action = [&, from, to, value] { out << write_value(*to, read_value(*from, *value), max_dec_bits) << '\n'; };
        });
    }
    {
        auto* sc = app.add_subcommand("special", "Build a Mersenne, Fermat or perfect number");
        auto kind = std::make_shared<std::string>();
        auto p = std::make_shared<std::string>();
        auto output = std::make_shared<std::string>("tree");
        sc->add_option("kind", *kind)->required()->check(CLI::IsMember({"mersenne", "fermat", "perfect"}));
        sc->add_option("p", *p, "Exponent, decimal")->required();
        sc->add_option("--output", *output)
            ->check(CLI::IsMember({"dec", "tree", "bitsize", "dot", "nodes"}))
            ->capture_default_str();
        sc->callback([&, kind, p, output] {
            action = [&, kind, p, output] {
                const Tree e = tree_from_refnat(RefNat::parse_decimal(*p));
                const Tree x = *kind == "mersenne" ? mersenne(e) : *kind == "fermat" ? fermat(e) : perfect(e);
                if (*output == "bitsize")
                    out << decimal(bitsize_fast(x)) << '\n';
                else if (*output == "nodes")
                    out << fold_to_dag(x).size() << '\n';
                else if (*output == "dot")
                    out << dag_to_dot(fold_to_dag(x));
                else
                    out << write_value(*output, x, max_dec_bits) << '\n';
            };
        });
    }
    {
        const std::vector<std::string> views = {"list", "mset", "set"};
        auto* enc = app.add_subcommand("encode", "Encode a comma-separated collection as a natural");
        auto* dec = app.add_subcommand("decode", "Decode a natural into a collection");
        auto view_name = std::make_shared<std::string>();
        auto text = std::make_shared<std::string>();
        auto rep = std::make_shared<std::string>("dec");
        for (auto* sc : {enc, dec}) {
            sc->add_option("view", *view_name)->required()->check(CLI::IsMember(views));
            sc->add_option("value", *text, sc == enc ? "Elements, e.g. 1,4,6" : "Encoded value")->required();
            sc->add_option("--rep", *rep, "Format of the natural")
                ->check(CLI::IsMember(formats))
                ->capture_default_str();
        }
        enc->callback([&, view_name, text, rep] {
            action = [&, view_name, text, rep] {
                const auto xs = read_elements(*text);
                const Tree x = *view_name == "list" ? from_list(xs) : *view_name == "mset" ? from_mset(xs) : from_set(xs);
                out << write_value(*rep, x, max_dec_bits) << '\n';
            };
        });
        dec->callback([&, view_name, text, rep] {
            action = [&, view_name, text, rep] {
                const Tree x = read_value(*rep, *text);
                const auto xs = *view_name == "list" ? to_list(x) : *view_name == "mset" ? to_mset(x) : to_set(x);
                out << join(xs) << '\n';
            };
        });
    }
    {
        auto* sc = app.add_subcommand("bits", "Bitwise operations through the set view");
        auto op = std::make_shared<std::string>();
        auto operands = std::make_shared<std::vector<std::string>>();
        auto rep = std::make_shared<std::string>("dec");
        sc->add_option("op", *op)->required()->check(CLI::IsMember({"and", "or", "xor", "dif", "ite", "not"}));
        sc->add_option("operands", *operands, "Operands; for not: bit length then value")->required();
        sc->add_option("--rep", *rep, "Format of values")->check(CLI::IsMember(formats))->capture_default_str();
        sc->callback([&, op, operands, rep] {
            action = [&, op, operands, rep] {
                const std::size_t arity = *op == "ite" ? 3 : 2;
                if (operands->size() != arity)
                    throw CLI::ValidationError("bits " + *op + " takes " + std::to_string(arity) + " operands");
                const auto& xs = *operands;
                Tree r;
                if (*op == "not") {
                    r = l_not(read_u64(xs[0]), read_value(*rep, xs[1]));
                } else {
                    const Tree a = read_value(*rep, xs[0]);
                    const Tree b = read_value(*rep, xs[1]);
                    if (*op == "and")
                        r = l_and(a, b);
                    else if (*op == "or")
                        r = l_or(a, b);
                    else if (*op == "xor")
                        r = l_xor(a, b);
                    else if (*op == "dif")
                        r = l_dif(a, b);
                    else
                        r = l_ite(a, b, read_value(*rep, xs[2]));
                }
                out << write_value(*rep, r, max_dec_bits) << '\n';
            };
        });
    }
    {
        auto* sc = app.add_subcommand("dot", "Print the shared-subtree DAG of a value as DOT");
        auto value = std::make_shared<std::string>();
        auto from = std::make_shared<std::string>("dec");
        sc->add_option("value", *value)->required();
        sc->add_option("--from", *from)->check(CLI::IsMember(formats))->capture_default_str();
        sc->callback([&, value, from] {
            action = [&, value, from] { out << dag_to_dot(fold_to_dag(read_value(*from, *value))); };
        });
    }
    {
        auto* sc = app.add_subcommand("bench", "Run timed benchmark suites");
        auto suite = std::make_shared<std::string>("all");
        auto rep = std::make_shared<std::string>("all");
        std::vector<std::string> suites = bench::suite_names();
        suites.push_back("all");
        sc->add_option("suite", *suite)->check(CLI::IsMember(suites))->capture_default_str();
        sc->add_option("--rep", *rep)->check(CLI::IsMember({"t", "b", "n", "all"}))->capture_default_str();
        sc->callback([&, suite, rep] {
            action = [&, suite, rep] {
                const std::vector<std::string> names =
                    *suite == "all" ? bench::suite_names() : std::vector<std::string>{*suite};
                const std::string rs = *rep == "all" ? "tbn" : *rep;
                for (const auto& name : names) {
                    for (char r : rs)
                        out << bench::format(bench::run(name, r)) << '\n' << std::flush;
                }
            };
        });
    }
    {
        auto* nsyr_cmd = app.add_subcommand("nsyr", "Syracuse iteration from n down to 0");
        auto* primes_cmd = app.add_subcommand("primes", "The first k primes");
        auto* ack_cmd = app.add_subcommand("ack", "Ackermann function");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto rep = std::make_shared<std::string>("t");
        nsyr_cmd->add_option("n", *a)->required();
        primes_cmd->add_option("k", *a)->required();
        ack_cmd->add_option("m", *a)->required();
        ack_cmd->add_option("n", *b)->required();
        for (auto* sc : {nsyr_cmd, primes_cmd, ack_cmd})
            sc->add_option("--rep", *rep, "Representation")->check(CLI::IsMember(reps))->capture_default_str();
        nsyr_cmd->callback([&, a, rep] {
            action = [&, a, rep] {
                const RefNat n = RefNat::parse_decimal(*a);
                with_rep((*rep)[0], [&]<class N>(N) { out << join(nsyr(view<N>(n))) << '\n'; });
            };
        });
        primes_cmd->callback([&, a, rep] {
            action = [&, a, rep] {
                const std::uint64_t k = read_u64(*a);
                with_rep((*rep)[0], [&]<class N>(N) { out << join(first_primes<N>(k)) << '\n'; });
            };
        });
        ack_cmd->callback([&, a, b, rep] {
            action = [&, a, b, rep] {
                const RefNat m = RefNat::parse_decimal(*a);
                const RefNat n = RefNat::parse_decimal(*b);
                with_rep((*rep)[0], [&]<class N>(N) {
                    out << view<RefNat>(ack(view<N>(m), view<N>(n))).to_decimal() << '\n';
                });
            };
        });
    }

    std::vector<const char*> argv{"giant"};
    for (const auto& s : args)
        argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (action)
            action();
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return e.get_exit_code() != 0 ? e.get_exit_code() : 2;
    } catch (const Refusal& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace giant::cli
