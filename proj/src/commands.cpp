#include "qgl/commands.hpp"

#include "qgl/corep.hpp"
#include "qgl/corpus.hpp"
#include "qgl/crossed.hpp"
#include "qgl/fusion.hpp"
#include "qgl/haar.hpp"
#include "qgl/hopf.hpp"
#include "qgl/opnorm.hpp"
#include "qgl/parse.hpp"
#include "qgl/report.hpp"
#include "qgl/separation.hpp"
#include "qgl/truncrep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

namespace qgl {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QValue {
  double numeric = 0.5;
  BigRational exact{1, 2};
};

QValue parseQ(const std::string& text) {
  QValue v;
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      v.exact = BigRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
      v.numeric = static_cast<double>(v.exact);
    } else {
      v.numeric = std::stod(text);
      v.exact = rationalFromDouble(v.numeric);
    }
  } catch (const std::exception&) {
    throw UsageError("invalid --q value '" + text + "'");
  }
  if (!(std::abs(v.numeric) > 0.0 && std::abs(v.numeric) < 1.0))
    throw UsageError("--q must satisfy 0 < |q| < 1");
  return v;
}

struct ThetaValue {
  double numeric = 0.0;
  std::optional<ClockTheta> clock;
};

ThetaValue parseTheta(const std::string& text) {
  ThetaValue v;
  if (text == "golden") {
    v.numeric = (std::sqrt(5.0) - 1.0) / 2.0;
    return v;
  }
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      int l = std::stoi(text.substr(0, slash));
      int n = std::stoi(text.substr(slash + 1));
      v.clock = ClockTheta{l, n};
      v.numeric = static_cast<double>(l) / n;
    } else {
      v.numeric = std::stod(text);
    }
  } catch (const std::exception&) {
    throw UsageError("invalid --theta value '" + text + "'");
  }
  return v;
}

AlgebraTag parseAlgebra(const std::string& text) {
  if (text == "suq2") return AlgebraTag::SUq2;
  if (text == "gq") return AlgebraTag::GqTheta;
  if (text == "torus") return AlgebraTag::Torus;
  if (text == "circle") return AlgebraTag::Circle;
  throw UsageError("unknown --algebra '" + text + "' (suq2|gq|torus|circle)");
}

std::string printTensor(const TensorElement& t) {
  if (t.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : t.terms()) {
    std::string left = printElement(monomialElement(key.first, c));
    std::string right = printElement(monomialElement(key.second));
    bool neg = !left.empty() && left[0] == '-';
    if (neg) left = left.substr(1);
    if (first) {
      out += (neg ? "-" : "");
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += left + " (x) " + right;
  }
  return out;
}

struct Output {
  std::string format = "json";
  std::string outFile;

  void emitText(std::ostream& stdoutStream, const std::string& text) const {
    if (!outFile.empty()) {
      std::ofstream f(outFile);
      f << text << "\n";
    } else {
      stdoutStream << text << "\n";
    }
  }

  void emitReport(std::ostream& stdoutStream, const Report& report) const {
    std::string text;
    if (format == "csv") {
      std::ostringstream csv;
      bool header = false;
      for (const auto& row : report.perItem) {
        if (!header) {
          bool first = true;
          for (auto it = row.begin(); it != row.end(); ++it) {
            csv << (first ? "" : ",") << it.key();
            first = false;
          }
          csv << "\n";
          header = true;
        }
        bool first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
          csv << (first ? "" : ",") << canonicalJson(it.value());
          first = false;
        }
        csv << "\n";
      }
      text = csv.str();
      if (!text.empty() && text.back() == '\n') text.pop_back();
    } else {
      text = report.canonicalString();
    }
    emitText(stdoutStream, text);
  }
};

constexpr double kGolden = 0.61803398874989484820;

ClockTheta clockOrThrow(const ThetaValue& theta, const char* what) {
  if (!theta.clock) throw UsageError(std::string(what) + " requires a rational --theta L/N");
  return *theta.clock;
}

ClockTheta parseClockPair(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw UsageError("expected L/N, got '" + text + "'");
  return ClockTheta{std::stoi(text.substr(0, slash)), std::stoi(text.substr(slash + 1))};
}

std::vector<FusionLabel> parseLabels(FusionKind kind, const std::string& text) {
  std::vector<FusionLabel> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == ';')) ++i;
  };
  auto readInt = [&]() {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw UsageError("expected an integer in --gens at offset " + std::to_string(i));
    return std::stoi(text.substr(start, i - start));
  };
  skip();
  while (i < text.size()) {
    FusionLabel l;
    if (kind == FusionKind::productSu2Int) {
      if (text[i] != '(') throw UsageError("product labels look like (s,z)");
      ++i;
      l.s = readInt();
      if (i >= text.size() || text[i] != ',') throw UsageError("product labels look like (s,z)");
      ++i;
      l.z = readInt();
      if (i >= text.size() || text[i] != ')') throw UsageError("product labels look like (s,z)");
      ++i;
    } else {
      int v = readInt();
      if (kind == FusionKind::su2spin) {
        l.s = v;
      } else {
        l.z = v;
      }
    }
    out.push_back(l);
    skip();
  }
  return out;
}

nlohmann::json rowsJson(const NormAgreementResult& res) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : res.rows) {
    rows.push_back({{"label", r.label},
                    {"normA", r.normA},
                    {"normB", r.normB},
                    {"relDiff", r.relDiff}});
  }
  return rows;
}

int emitVerdictReport(Report& report, const Output& output, std::ostream& out) {
  output.emitReport(out, report);
  return report.verdict ? 0 : 1;
}

}  // namespace

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symbolic and numerical laboratory for q-deformed *-algebras"};
  app.require_subcommand(1);

  std::string qText = "1/2", thetaText, algebraText = "suq2", exprText;
  Output output;
  int levels = 12, modes = 64, grid = 2048, chebDegree = 64, cutoff = 10, cap = 10000;
  int maxIndex = -1, maxPairs = 6;
  std::uint64_t seed = 1234;
  std::string ringText = "product", gensText = "(0,1)", modelAText = "55/89",
              modelBText = "89/144";
  bool originVector = false;

  auto addCommon = [&](CLI::App* cmd, bool withExpr) {
    cmd->add_option("--q", qText, "deformation parameter, rational p/r or decimal");
    cmd->add_option("--theta", thetaText, "phase: L/N, decimal, or 'golden'");
    cmd->add_option("--format", output.format)->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", output.outFile, "write the output to a file");
    if (withExpr) cmd->add_option("expr", exprText, "expression")->required();
    return cmd;
  };

  // Symbolic commands share the session flags.
  std::vector<std::pair<std::string, std::string>> symbolic = {
      {"nf", "normal form of an expression"},
      {"adjoint", "adjoint of an expression"},
      {"delta", "coproduct of an expression"},
      {"counit", "counit of an expression"},
      {"antipode", "antipode of an expression"},
      {"haar", "Haar state of an expression"},
      {"condexp", "conditional expectation onto the u-subalgebra"},
      {"invariant", "projection onto the torus-invariant part"},
  };
  bool substituteQ = false;
  for (auto& [name, desc] : symbolic) {
    auto* cmd = addCommon(app.add_subcommand(name, desc), true);
    cmd->add_option("--algebra", algebraText, "suq2|gq|torus|circle");
    if (name == "nf" || name == "adjoint" || name == "antipode" || name == "invariant")
      cmd->add_flag("--subst-q", substituteQ,
                    "substitute the --q value into the coefficients before printing");
  }

  auto* corepcheckCmd = addCommon(app.add_subcommand("corepcheck", "corepresentation axioms"), false);
  std::string corepName = "fundamental";
  corepcheckCmd->add_option("--corep", corepName)
      ->check(CLI::IsMember({"fundamental", "utheta", "tensor"}));
  corepcheckCmd->add_option("--algebra", algebraText);

  auto* cor24Cmd = addCommon(app.add_subcommand("cor24", "delta_ij identity under characters"), false);

  auto* spectrumCmd = addCommon(app.add_subcommand("spectrum", "spectrum of gamma* gamma"), false);
  spectrumCmd->add_option("--levels", levels);
  spectrumCmd->add_option("--modes", modes);
  spectrumCmd->add_flag("--origin", originVector);

  auto* normCmd = addCommon(app.add_subcommand("norm", "operator norm in the truncation"), true);
  normCmd->add_option("--levels", levels);
  normCmd->add_option("--modes", modes);
  normCmd->add_option("--algebra", algebraText);

  auto* thm31Cmd = addCommon(app.add_subcommand("exp-thm31", "norm separation experiment"), false);
  thm31Cmd->add_option("--levels", levels);
  thm31Cmd->add_option("--modes", modes);
  thm31Cmd->add_option("--grid", grid);
  thm31Cmd->add_option("--cheb-degree", chebDegree);

  auto* lemma44Cmd = addCommon(app.add_subcommand("exp-lemma44", "ladder decomposition check"), false);
  lemma44Cmd->add_option("--levels", levels);
  lemma44Cmd->add_option("--max-index", maxIndex);

  auto* thm46Cmd = addCommon(app.add_subcommand("exp-thm46", "two-model norm agreement"), false);
  thm46Cmd->add_option("--levels", levels);
  thm46Cmd->add_option("--cutoff", cutoff);
  thm46Cmd->add_option("--seed", seed);
  thm46Cmd->add_option("--model-a", modelAText, "clock L/N");
  thm46Cmd->add_option("--model-b", modelBText, "clock L/N");

  auto* torusCmd = addCommon(app.add_subcommand("exp-torus", "torus two-model norm agreement"), false);
  torusCmd->add_option("--seed", seed);
  torusCmd->add_option("--model-a", modelAText, "clock L/N");
  torusCmd->add_option("--model-b", modelBText, "clock L/N");

  auto* haarCmdChain = addCommon(app.add_subcommand("haar-chain", "Haar values on the chain"), false);
  haarCmdChain->add_option("--max-pairs", maxPairs);

  auto* fusionCmd = addCommon(app.add_subcommand("fusion-lf", "local finiteness closure"), false);
  fusionCmd->add_option("--ring", ringText)->check(CLI::IsMember({"su2", "int", "cyclic", "product"}));
  int cyclicN = 6;
  fusionCmd->add_option("--n", cyclicN, "cyclic modulus");
  fusionCmd->add_option("--gens", gensText);
  fusionCmd->add_option("--cap", cap);

  std::vector<const char*> argv;
  argv.push_back("qgl");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << e.what() << "\n";
      return 2;
    }

    QValue q = parseQ(qText);
    ThetaValue theta = thetaText.empty() ? ThetaValue{kGolden, std::nullopt} : parseTheta(thetaText);
    AlgebraTag tag = parseAlgebra(algebraText);

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    auto emitSymbolic = [&](const std::string& text) {
      if (output.format == "json") {
        Report r;
        r.command = name;
        r.parameters = {{"expr", exprText}, {"algebra", algebraText}, {"q", qText}};
        r.metrics = {{"result", text}};
        r.verdict = true;
        output.emitReport(out, r);
      } else {
        output.emitText(out, text);
      }
      return 0;
    };
    // Plain text is the symbolic default unless --format was given explicitly.
    if (sub->count("--format") == 0) output.format = "text";

    if (name == "nf" || name == "adjoint" || name == "antipode" || name == "invariant") {
      Element x = parseExpression(exprText, tag);
      if (name == "adjoint") x = adjoint(x);
      if (name == "antipode") x = antipode(x);
      if (name == "invariant") x = invariantPart(x);
      return emitSymbolic(substituteQ || sub->count("--q") ? printElement(x, q.exact)
                                                           : printElement(x));
    }
    if (name == "delta") {
      Element x = parseExpression(exprText, tag);
      return emitSymbolic(printTensor(coproduct(x)));
    }
    if (name == "counit") {
      Element x = parseExpression(exprText, tag);
      return emitSymbolic(printElement(scalarElement(tag, counit(x))));
    }
    if (name == "haar") {
      Element x = parseExpression(exprText, tag);
      return emitSymbolic(haarState(x).toString());
    }
    if (name == "condexp") {
      Element x = parseExpression(exprText, tag);
      auto e = conditionalExpectation(x);
      if (e.empty()) return emitSymbolic("0");
      std::string text;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) text += " + ";
        text += "(" + e[i].second.toString() + ")";
        if (e[i].first != 0)
          text += std::string(" ") + (e[i].first > 0 ? "u" : "u*") +
                  (std::abs(e[i].first) == 1 ? "" : "^" + std::to_string(std::abs(e[i].first)));
      }
      return emitSymbolic(text);
    }
    if (name == "haar-chain") {
      auto values = haarChainValues(maxPairs);
      std::string text;
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (j) text += "\n";
        text += "h((g g*)^" + std::to_string(j) + ") = " + values[j].toString();
      }
      return emitSymbolic(text);
    }

    output.format = sub->count("--format") ? output.format : "json";

    if (name == "corepcheck") {
      AlgebraTag corepTag = corepName == "fundamental" ? tag : AlgebraTag::GqTheta;
      CorepMatrix U;
      if (corepName == "fundamental") {
        U = fundamentalCorep(corepTag);
      } else if (corepName == "utheta") {
        U = uThetaCorep();
      } else {
        U = tensorCorep(fundamentalCorep(AlgebraTag::GqTheta), uThetaCorep());
      }
      auto res = corepCheck(U);
      Report r;
      r.command = name;
      r.parameters = {{"corep", corepName}, {"algebra", tagName(corepTag)}};
      r.metrics = {{"defectCount", static_cast<int>(res.defects.size())}};
      for (const auto& d : res.defects)
        r.perItem.push_back({{"i", d.i}, {"j", d.j}, {"kind", d.kind}});
      r.verdict = res.ok;
      return emitVerdictReport(r, output, out);
    }

    if (name == "cor24") {
      CorepMatrix U = fundamentalCorep(AlgebraTag::SUq2);
      double maxDefect = 0.0;
      Report r;
      r.command = name;
      r.parameters = {{"q", qText}, {"samples", 5}};
      for (int s = 1; s <= 5; ++s) {
        Complex z = std::polar(1.0, 2.0 * std::numbers::pi * s / 7.0);
        Complex w = std::polar(1.0, 2.0 * std::numbers::pi * s / 5.0);
        FiniteDimRep rep = character(z, w, q.numeric);
        auto res = cor24Check(rep, U);
        maxDefect = std::max(maxDefect, res.maxDefect);
        r.perItem.push_back({{"sample", s}, {"maxDefect", res.maxDefect}, {"ok", res.ok}});
      }
      // Symbolic essentiality witness: the row sum for the first row is
      // 1 + (q^2 - 1) g* g, not 1.
      Element rowSum = zeroElement(AlgebraTag::SUq2);
      for (int p = 0; p < 2; ++p)
        rowSum = add(rowSum, multiply(adjoint(U.at(0, p)), U.at(0, p)));
      Element expected = unitElement(AlgebraTag::SUq2);
      Monomial gg{AlgebraTag::SUq2, 0, 1, 1, 0};
      expected.add(gg, LaurentCoefficient::qPower(2) - LaurentCoefficient::one());
      bool symbolicOk = rowSum == expected && rowSum != unitElement(AlgebraTag::SUq2);
      r.metrics = {{"maxDefect", maxDefect},
                   {"rowSumFirstRow", printElement(rowSum)},
                   {"rowSumIsUnit", rowSum == unitElement(AlgebraTag::SUq2)}};
      r.verdict = maxDefect <= 1e-10 && symbolicOk;
      return emitVerdictReport(r, output, out);
    }

    if (name == "spectrum") {
      TruncatedRepParams p;
      p.q = q.numeric;
      p.levels = levels;
      p.modesPerLevel = modes;
      p.originVector = originVector;
      if (!thetaText.empty()) p.theta = clockOrThrow(theta, "spectrum with --theta");
      TruncatedRep rep = buildFullRep(p);
      auto spec = spectrumGammaStarGamma(rep);
      Report r;
      r.command = name;
      r.parameters = {{"q", qText}, {"levels", levels}, {"modes", modes}, {"origin", originVector}};
      double maxDev = 0.0;
      // Closed form: eigenvalues q^{2k} with multiplicity N (plus 0 for the origin).
      std::vector<std::pair<double, int>> expected;
      if (originVector) expected.push_back({0.0, 1});
      for (int k = levels; k >= 0; --k)
        expected.push_back({std::pow(q.numeric, 2 * k), modes});
      std::sort(expected.begin(), expected.end());
      bool multiplicitiesOk = spec.size() == expected.size();
      for (std::size_t j = 0; j < spec.size(); ++j) {
        nlohmann::json row = {{"eigenvalue", spec[j].first}, {"multiplicity", spec[j].second}};
        if (j < expected.size()) {
          maxDev = std::max(maxDev, std::abs(spec[j].first - expected[j].first));
          multiplicitiesOk = multiplicitiesOk && spec[j].second == expected[j].second;
          row["expected"] = expected[j].first;
        }
        r.perItem.push_back(row);
      }
      r.metrics = {{"maxDeviation", maxDev},
                   {"multiplicitiesOk", multiplicitiesOk},
                   {"interiorResidual", rep.certificate.interiorResidual},
                   {"boundaryDefect", rep.certificate.boundaryDefect}};
      r.verdict = multiplicitiesOk && maxDev <= 1e-12;
      return emitVerdictReport(r, output, out);
    }

    if (name == "norm") {
      TruncatedRepParams p;
      p.q = q.numeric;
      p.levels = levels;
      p.modesPerLevel = modes;
      if (!thetaText.empty()) {
        p.theta = clockOrThrow(theta, "norm with --theta");
        p.modesPerLevel = p.theta->N;
      }
      if (tag == AlgebraTag::GqTheta && !p.theta)
        throw UsageError("norm over gq requires a rational --theta");
      TruncatedRep rep = buildFullRep(p);
      Element x = parseExpression(exprText, tag);
      double n = operatorNorm(Eigen::MatrixXcd(evalElementSparse(
          rep, x, Bindings{q.numeric, p.theta ? std::polar(1.0, 2 * std::numbers::pi *
                                                                     p.theta->value())
                                              : Complex{1.0, 0.0}})));
      Report r;
      r.command = name;
      r.parameters = {{"expr", exprText},
                      {"q", qText},
                      {"levels", p.levels},
                      {"modes", p.modesPerLevel},
                      {"algebra", algebraText}};
      r.metrics = {{"norm", n}};
      r.verdict = true;
      return emitVerdictReport(r, output, out);
    }

    if (name == "exp-thm31") {
      SeparationParams p;
      p.q = q.numeric;
      p.levels = levels;
      p.modesPerLevel = modes;
      p.anglesPerLevel = grid;
      p.chebDegree = chebDegree;
      SeparationResult res = normSeparationExperiment(p);
      Report r;
      r.command = name;
      r.parameters = {{"q", qText},
                      {"levels", levels},
                      {"modes", modes},
                      {"grid", grid},
                      {"chebDegree", chebDegree}};
      auto rowJson = [](const SeparationRow& row) {
        return nlohmann::json{{"label", row.label},
                              {"fullNormSpectral", row.fullNormSpectral},
                              {"fullNormOperator", row.fullNormOperator},
                              {"restrictedNorm", row.restrictedNorm}};
      };
      r.perItem.push_back(rowJson(res.witness));
      r.perItem.push_back(rowJson(res.gammaControl));
      r.perItem.push_back(rowJson(res.zeroControl));
      r.metrics = {{"rampThreshold", res.rampThreshold},
                   {"chebSupError", res.chebSupError},
                   {"normRatio", res.normRatio},
                   {"sigmaMin", res.injectivity.sigmaMin},
                   {"separated", res.separated}};
      r.verdict = res.separated;
      return emitVerdictReport(r, output, out);
    }

    if (name == "exp-lemma44") {
      ClockTheta clock = thetaText.empty() ? ClockTheta{1, 8} : clockOrThrow(theta, name.c_str());
      TruncatedRep rep = buildCrossedRep(q.numeric, levels, clock);
      ShiftDecomposition dec = shiftDecomposition(rep, maxIndex);
      Report r;
      r.command = name;
      r.parameters = {{"q", qText},
                      {"levels", levels},
                      {"clockL", clock.L},
                      {"clockN", clock.N},
                      {"maxIndex", maxIndex}};
      for (const auto& [n, measured] : dec.cqMeasured) {
        r.perItem.push_back({{"n", n},
                             {"measured", measured},
                             {"cq", cq(n + 1, n, q.numeric)}});
      }
      r.metrics = {{"maxLadderResidual", dec.maxLadderResidual},
                   {"maxUnitarityDefect", dec.maxUnitarityDefect},
                   {"maxClockCommutator", dec.maxClockCommutator},
                   {"maxGammaIntertwine", dec.maxGammaIntertwine},
                   {"tolerance", dec.tolerance}};
      r.verdict = dec.ok;
      return emitVerdictReport(r, output, out);
    }

    if (name == "exp-thm46" || name == "exp-torus") {
      TorusModel modelA, modelB;
      {
        ClockTheta a = parseClockPair(modelAText), b = parseClockPair(modelBText);
        modelA = clockModel(a.L, a.N);
        modelB = clockModel(b.L, b.N);
      }
      Report r;
      r.command = name;
      r.parameters = {{"q", qText},
                      {"seed", seed},
                      {"modelA", modelAText},
                      {"modelB", modelBText}};
      NormAgreementResult res;
      if (name == "exp-thm46") {
        r.parameters["levels"] = levels;
        r.parameters["cutoff"] = cutoff;
        auto suite = randomSuite(AlgebraTag::GqTheta, seed, 10, 3, 4, true);
        res = normAgreementExperiment(suite, modelA, modelB, q.numeric, cutoff);
        // Structural cross-check against the direct crossed-product evaluation.
        TruncatedRep direct = buildCrossedRep(q.numeric, cutoff, modelA.clock);
        TorusRep torusA = buildTorusRep(modelA);
        double crossCheck = 0.0;
        for (const auto& [label, x] : suite) {
          Eigen::MatrixXcd assembled = assembleMatrixForm(x, torusA, q.numeric, cutoff).matrix;
          Eigen::MatrixXcd evaluated = evalElement(direct, x);
          crossCheck = std::max(crossCheck, (assembled - evaluated).cwiseAbs().maxCoeff());
        }
        r.metrics["assembleCrossCheck"] = crossCheck;
        r.verdict = res.agree && crossCheck <= 1e-8;
      } else {
        auto suite = randomSuite(AlgebraTag::Torus, seed, 10, 3, 4, true);
        res = torusUniquenessDemo(suite, modelA, modelB);
        r.verdict = res.agree;
      }
      r.perItem = rowsJson(res);
      r.metrics["maxRelDiff"] = res.maxRelDiff;
      r.metrics["tolerance"] = res.tolerance;
      return emitVerdictReport(r, output, out);
    }

    if (name == "fusion-lf") {
      FusionKind kind;
      int parameter = 0;
      if (ringText == "su2") {
        kind = FusionKind::su2spin;
      } else if (ringText == "int") {
        kind = FusionKind::integers;
      } else if (ringText == "cyclic") {
        kind = FusionKind::cyclic;
        parameter = cyclicN;
      } else {
        kind = FusionKind::productSu2Int;
      }
      FusionRing ring = makeFusionRing(kind, parameter);
      auto gens = parseLabels(kind, gensText);
      auto res = localFinitenessCheck(ring, gens, cap);
      Report r;
      r.command = name;
      r.parameters = {{"ring", ringText}, {"gens", gensText}, {"cap", cap}};
      if (kind == FusionKind::cyclic) r.parameters["n"] = cyclicN;
      bool sound;
      if (res.finite) {
        sound = closureIsSound(ring, res.closure);
        for (const auto& l : res.closure) r.perItem.push_back(ring.labelString(l));
        r.metrics = {{"finite", true},
                     {"closureSize", static_cast<int>(res.closure.size())},
                     {"closureSound", sound}};
      } else {
        bool strictlyGrowing = true;
        for (std::size_t i = 1; i < res.growthChain.size(); ++i)
          strictlyGrowing = strictlyGrowing && res.growthChain[i] > res.growthChain[i - 1];
        sound = strictlyGrowing;
        for (int s : res.growthChain) r.perItem.push_back(s);
        r.metrics = {{"finite", false},
                     {"notLocallyFinite", true},
                     {"reachedSize", static_cast<int>(res.closure.size())},
                     {"strictlyGrowingChain", strictlyGrowing}};
      }
      r.verdict = sound;
      return emitVerdictReport(r, output, out);
    }

    err << "unknown subcommand\n";
    return 2;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const AlgebraError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const FusionError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 3;
  }
}

}  // namespace qgl
