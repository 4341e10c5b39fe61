#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "smallcover/charmap.hpp"
#include "smallcover/enumerate.hpp"
#include "smallcover/hodge.hpp"
#include "smallcover/triangular.hpp"

namespace smallcover::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNotCharacteristic = 2,
  kNotFactorCompatible = 3,
};

/// Malformed instance file or arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CharMatrix parse_instance(const nlohmann::json& j);
CharMatrix load_instance(const std::string& path);
nlohmann::json instance_json(const CharMatrix& lambda);

/// Centered diamond, top row h^{n,n}.
std::vector<std::string> render_diamond(const HodgePolynomial& h);

nlohmann::json analyze_json(const CharMatrix& lambda);
nlohmann::json hodge_json(const CharMatrix& lambda, const HodgeAnalysis& analysis);
nlohmann::json blockize_json(const CharMatrix& lambda, const TriangularForm& form);
nlohmann::json census_json(const Census& census, bool compatible_only);
std::string census_table(const Census& census, bool compatible_only);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smallcover::cli
