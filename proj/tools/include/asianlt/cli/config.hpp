#pragma once

#include <istream>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace asianlt::cli {

/// Reads a flat JSON object whose keys are long flag names without dashes,
/// e.g. {"sigma": 0.5, "with-mc": true}. Keys naming a root option go to the
/// root; all others go to the subcommand selected on the command line.
/// Values given on the command line take precedence.
class FlatJsonConfig : public CLI::Config {
 public:
  explicit FlatJsonConfig(const CLI::App* root) : root_(root) {}

  std::string to_config(const CLI::App* app, bool default_also, bool write_description,
                        std::string prefix) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;

 private:
  const CLI::App* root_;
};

}  // namespace asianlt::cli
