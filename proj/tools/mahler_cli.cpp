#include "mahler/parse.hpp"
#include "mahler/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitVerdict = 0;
constexpr int kExitInput = 2;
constexpr int kExitMath = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide whether a p-Mahler system phi_p(Y) = A(z) Y is regular singular at 0,"
                 " and compute the constant matrix and a gauge truncation when it is"};

    mahler::InputDoc doc;
    std::string matrix_file, example, format = "text";
    long p = 0, d_override = 0;

    app.add_option("--p", p, "Mahler exponent p >= 2 (required unless --example)");
    auto* mf = app.add_option("--matrix", matrix_file, "file holding the matrix expression");
    auto* ex = app.add_option("--example", example, "built-in system: order2, rudin_shapiro, "
                                                    "baum_sweet_variant, order1");
    app.add_option("--order", doc.order, "truncate the gauge at Puiseux exponents <= order")
        ->default_val(10);
    app.add_option("--d", d_override, "fix the ramification index, skipping its computation");
    app.add_flag("--scan-all-d", doc.scan_all_d, "try every admissible d in increasing order");
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    mf->excludes(ex);

    CLI11_PARSE(app, argc, argv);

    doc.format = format == "json" ? mahler::InputDoc::Format::Json : mahler::InputDoc::Format::Text;
    if (d_override != 0) doc.d_override = d_override;

    if (!example.empty()) {
        doc.example = example;
    } else {
        if (matrix_file.empty()) {
            std::cerr << "error: either --matrix or --example is required\n";
            return kExitInput;
        }
        if (p < 2) {
            std::cerr << "error: --p must be an integer >= 2\n";
            return kExitInput;
        }
        doc.p = p;
        std::ifstream in(matrix_file);
        if (!in) {
            std::cerr << "error: cannot open '" << matrix_file << "'\n";
            return kExitInput;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        doc.matrix_text = buf.str();
    }

    try {
        mahler::Report report = mahler::run(doc);
        if (doc.format == mahler::InputDoc::Format::Json)
            std::cout << mahler::to_json(report).dump(2) << "\n";
        else
            std::cout << mahler::to_text(report);
        return kExitVerdict;  // a negative verdict is still a verdict
    } catch (const mahler::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return kExitMath;
    }
}
