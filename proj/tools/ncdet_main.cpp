#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ncdet/ops.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ncdet;

std::vector<int> parse_csv_labels(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad label list \"" + text + "\"");
    }
  }
  if (out.empty()) throw ParseError("bad label list \"" + text + "\"");
  return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct Options {
  std::string matrix_path;
  int row = 1;
  int col = 1;
  std::string rows_csv, cols_csv;
  std::string method = "moore";
  bool as_float = false;
  int n = 3;
  VerifyConfig verify;
  std::string verify_scalar = "rational-quaternion";
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasideterminants and determinants over noncommutative scalars"};
  app.require_subcommand(1);
  Options opt;

  auto add_matrix = [&](CLI::App* cmd) {
    cmd->add_option("--matrix", opt.matrix_path, "matrix file (JSON)")->required();
    cmd->add_flag("--float", opt.as_float, "print values as floating point");
  };

  auto* c_quasidet = app.add_subcommand("quasidet", "quasideterminant at a position");
  add_matrix(c_quasidet);
  c_quasidet->add_option("--row", opt.row, "row label")->required();
  c_quasidet->add_option("--col", opt.col, "column label")->required();

  auto* c_moore = app.add_subcommand("moore", "Moore determinant");
  add_matrix(c_moore);

  auto* c_study = app.add_subcommand("study", "Study determinant");
  add_matrix(c_study);

  auto* c_dieu = app.add_subcommand("dieudonne", "squared Dieudonne determinant");
  add_matrix(c_dieu);

  auto* c_norm = app.add_subcommand("norm", "matrix norm");
  add_matrix(c_norm);
  c_norm->add_option("--method", opt.method, "moore|recursive")->capture_default_str();

  auto* c_predet = app.add_subcommand("predet", "predeterminant for an ordering pair");
  add_matrix(c_predet);
  c_predet->add_option("--rows", opt.rows_csv, "row ordering, comma separated")->required();
  c_predet->add_option("--cols", opt.cols_csv, "column ordering, comma separated")->required();

  auto* c_perm = app.add_subcommand("permanent", "double permanent at a position");
  add_matrix(c_perm);
  c_perm->add_option("--row", opt.row, "row label")->required();
  c_perm->add_option("--col", opt.col, "column label")->required();

  auto* c_expand = app.add_subcommand("expand", "symbolic expansion terms");
  c_expand->add_option("--n", opt.n, "matrix order")->required();
  c_expand->add_option("--row", opt.row, "row label")->required();
  c_expand->add_option("--col", opt.col, "column label")->required();

  auto* c_verify = app.add_subcommand("verify", "run identity verification suites");
  c_verify->add_option("--suite", opt.verify.suite, "suite name or \"all\"")->capture_default_str();
  c_verify->add_option("--n", opt.verify.n, "matrix order")->capture_default_str();
  c_verify->add_option("--trials", opt.verify.trials, "number of random trials")
      ->capture_default_str();
  c_verify->add_option("--seed", opt.verify.seed, "base seed")->capture_default_str();
  c_verify->add_option("--scalar", opt.verify_scalar, "scalar kind")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_quasidet)) {
      const json doc =
          op_quasidet(load_matrix_file(opt.matrix_path), opt.row, opt.col, opt.as_float);
      emit(doc);
      return doc["defined"].get<bool>() ? 0 : 1;
    }
    if (app.got_subcommand(c_moore)) {
      emit(op_moore(load_matrix_file(opt.matrix_path), opt.as_float));
    } else if (app.got_subcommand(c_study)) {
      emit(op_study(load_matrix_file(opt.matrix_path), opt.as_float));
    } else if (app.got_subcommand(c_dieu)) {
      emit(op_dieudonne(load_matrix_file(opt.matrix_path), opt.as_float));
    } else if (app.got_subcommand(c_norm)) {
      emit(op_norm(load_matrix_file(opt.matrix_path), opt.method, opt.as_float));
    } else if (app.got_subcommand(c_predet)) {
      emit(op_predet(load_matrix_file(opt.matrix_path), parse_csv_labels(opt.rows_csv),
                     parse_csv_labels(opt.cols_csv), opt.as_float));
    } else if (app.got_subcommand(c_perm)) {
      emit(op_permanent(load_matrix_file(opt.matrix_path), opt.row, opt.col, default_cap(),
                        opt.as_float));
    } else if (app.got_subcommand(c_expand)) {
      emit(op_expand(opt.n, opt.row, opt.col, default_cap()));
    } else if (app.got_subcommand(c_verify)) {
      opt.verify.scalar = tag_from_name(opt.verify_scalar);
      opt.verify.cap = default_cap();
      const json doc = op_verify(opt.verify);
      emit(doc);
      return doc["ok"].get<bool>() ? 0 : 1;
    }
    return 0;
  } catch (const UndefinedResult& e) {
    emit(json{{"error", e.what()}});
    return 1;
  } catch (const SingularMatrix& e) {
    emit(json{{"error", e.what()}});
    return 1;
  } catch (const DegenerateStream& e) {
    emit(json{{"error", e.what()}});
    return 1;
  } catch (const ZeroDivision& e) {
    emit(json{{"error", e.what()}});
    return 1;
  } catch (const Error& e) {
    emit(json{{"error", e.what()}});
    return 2;
  }
}
