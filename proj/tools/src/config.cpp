#include "asianlt/cli/config.hpp"

#include <json.hpp>

namespace asianlt::cli {

using Json = nlohmann::json;

std::string FlatJsonConfig::to_config(const CLI::App* app, bool default_also, bool,
                                      std::string) const {
  Json doc = Json::object();
  for (const CLI::Option* opt : app->get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || !opt->get_configurable()) continue;
    if (opt->count() > 0) {
      doc[name] = opt->as<std::string>();
    } else if (default_also && !opt->get_default_str().empty()) {
      doc[name] = opt->get_default_str();
    }
  }
  return doc.dump(2) + "\n";
}

std::vector<CLI::ConfigItem> FlatJsonConfig::from_config(std::istream& input) const {
  Json doc;
  try {
    doc = Json::parse(input);
  } catch (const Json::parse_error& e) {
    throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw CLI::ConversionError("config file must hold a flat JSON object");
  }

  std::vector<std::string> parents;
  for (const CLI::App* sub : root_->get_subcommands()) {
    parents = {sub->get_name()};
  }

  std::vector<CLI::ConfigItem> items;
  for (const auto& [key, value] : doc.items()) {
    CLI::ConfigItem item;
    item.name = key;
    if (root_->get_option_no_throw("--" + key) == nullptr) item.parents = parents;
    if (value.is_string()) {
      item.inputs = {value.get<std::string>()};
    } else if (value.is_boolean()) {
      item.inputs = {value.get<bool>() ? "true" : "false"};
    } else if (value.is_number()) {
      item.inputs = {value.dump()};
    } else {
      throw CLI::ConversionError("config key '" + key + "' must be a string, number or boolean");
    }
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace asianlt::cli
