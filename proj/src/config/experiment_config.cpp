// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/config/experiment_config.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "vqfl/error.hpp"
#include "vqfl/quantum/state.hpp"

namespace vqfl::config {
namespace {

using nlohmann::json;

// Reads one JSON object, tracking which keys were consumed so leftovers can
// be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw ConfigError(path_.empty() ? "config" : path_, "expected an object");
  }

  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json* find(const std::string& key) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    if (it == obj_.end() || it->is_null()) return nullptr;
    return &*it;
  }

  template <typename T>
  void read(const std::string& key, T& out) {
    if (const json* v = find(key)) out = convert<T>(*v, field(key));
  }

  template <typename T>
  void read_optional(const std::string& key, std::optional<T>& out) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    if (it == obj_.end()) return;
    if (it->is_null()) {
      out.reset();
    } else {
      out = convert<T>(*it, field(key));
    }
  }

  void finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it) {
      if (!seen_.contains(it.key())) throw ConfigError(field(it.key()), "unknown key");
    }
  }

  template <typename T>
  static T convert(const json& v, const std::string& name) {
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw ConfigError(name, "expected true or false");
      return v.get<bool>();
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw ConfigError(name, "expected an integer");
      if constexpr (std::is_unsigned_v<T>) {
        if (v.is_number_unsigned() || v.get<std::int64_t>() >= 0) return v.get<T>();
        throw ConfigError(name, "must be non-negative");
      } else {
        return v.get<T>();
      }
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) throw ConfigError(name, "expected a number");
      return v.get<T>();
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) throw ConfigError(name, "expected a string");
      return v.get<std::string>();
    } else if constexpr (std::is_same_v<T, std::vector<double>>) {
      if (!v.is_array()) throw ConfigError(name, "expected an array of numbers");
      std::vector<double> out;
      for (const json& e : v) out.push_back(convert<double>(e, name));
      return out;
    } else {
      static_assert(sizeof(T) == 0, "unsupported config type");
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

optim::OptimizerConfig read_optimizer(const json& v, const std::string& path) {
  ObjectReader r(v, path);
  optim::OptimizerConfig o;
  std::string method = optim::to_string(o.method);
  r.read("method", method);
  try {
    o.method = optim::method_from_string(method);
  } catch (const InvalidArgument& e) {
    throw ConfigError(r.field("method"), e.what());
  }
  r.read("maxiter", o.maxiter);
  r.read("seed", o.seed);
  r.read("step_size", o.step_size);
  r.read("initial_simplex_scale", o.initial_simplex_scale);
  r.read("fd_epsilon", o.fd_epsilon);
  r.finish();
  try {
    o.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(r.field(e.field()), e.what());
  }
  return o;
}

json optimizer_json(const optim::OptimizerConfig& o) {
  return {{"method", optim::to_string(o.method)}, {"maxiter", o.maxiter},
          {"seed", o.seed},
          {"step_size", o.step_size},
          {"initial_simplex_scale", o.initial_simplex_scale},
          {"fd_epsilon", o.fd_epsilon}};
}

template <typename E>
E enum_from(const std::string& field, const std::string& value,
            std::initializer_list<std::pair<const char*, E>> options) {
  std::string expected;
  for (const auto& [name, e] : options) {
    if (value == name) return e;
    expected += expected.empty() ? name : std::string("|") + name;
  }
  throw ConfigError(field, "expected " + expected + ", got '" + value + "'");
}

const char* model_name(ModelKind k) { return k == ModelKind::Vqc ? "vqc" : "qcnn"; }
const char* source_name(DataSource s) { return s == DataSource::Blobs ? "blobs" : "csv"; }
const char* scaler_name(ScalerChoice s) {
  switch (s) {
    case ScalerChoice::None: return "none";
    case ScalerChoice::Standard: return "standard";
    case ScalerChoice::MinMax: return "minmax";
  }
  return "?";
}

}  // namespace

bool operator==(const optim::OptimizerConfig& a, const optim::OptimizerConfig& b) {
  return a.method == b.method && a.maxiter == b.maxiter && a.seed == b.seed &&
         a.step_size == b.step_size && a.initial_simplex_scale == b.initial_simplex_scale &&
         a.fd_epsilon == b.fd_epsilon;
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  return a.model == b.model && a.num_qubits == b.num_qubits && a.num_layers == b.num_layers &&
         a.num_classes == b.num_classes && a.devices == b.devices && a.rounds == b.rounds &&
         a.optimizer == b.optimizer && a.server_optimizer.has_value() == b.server_optimizer.has_value() &&
         (!a.server_optimizer || *a.server_optimizer == *b.server_optimizer) &&
         a.security == b.security && a.ft_mode == b.ft_mode && a.data == b.data &&
         a.root_seed == b.root_seed && a.threads == b.threads && a.output == b.output;
}

void ExperimentConfig::validate() const {
  if (num_qubits < 1 || num_qubits > quantum::kMaxQubits) {
    throw ConfigError("num_qubits", "must lie in [1, " + std::to_string(quantum::kMaxQubits) + "]");
  }
  if (num_layers < 1) throw ConfigError("num_layers", "must be >= 1");
  if (num_classes < 2) throw ConfigError("num_classes", "must be >= 2");
  if (num_classes > (std::size_t{1} << num_qubits)) {
    throw ConfigError("num_classes", std::to_string(num_classes) + " classes cannot be read out from " +
                                         std::to_string(num_qubits) + " qubits (max 2^num_qubits)");
  }
  if (model == ModelKind::Qcnn) {
    if (num_qubits < 2 || (num_qubits & (num_qubits - 1)) != 0) {
      throw ConfigError("num_qubits", "qcnn needs a power of two >= 2");
    }
    if (num_classes != 2) throw ConfigError("num_classes", "qcnn is a binary classifier");
  }
  if (devices.empty()) throw ConfigError("devices", "at least one device count is required");
  for (std::size_t k : devices) {
    if (k < 1) throw ConfigError("devices", "device counts must be >= 1");
  }
  if (rounds < 1) throw ConfigError("rounds", "must be >= 1");

  if (security.dp_enabled) {
    privacy::DpConfig dp{security.mechanism, security.epsilon, security.delta,
                         security.sensitivity, security.clip_nonnegative, security.decimals};
    try {
      dp.validate();
    } catch (const ConfigError& e) {
      throw ConfigError("security." + e.field(), e.what());
    }
  }
  if (security.serialization_decimals < 1 || security.serialization_decimals > 17) {
    throw ConfigError("security.serialization_decimals", "must lie in [1, 17]");
  }
  if (!(security.flip_probability >= 0.0 && security.flip_probability <= 1.0)) {
    throw ConfigError("security.flip_probability", "must lie in [0, 1]");
  }
  if (!(security.test_fraction > 0.0 && security.test_fraction < 1.0)) {
    throw ConfigError("security.test_fraction", "must lie in (0, 1)");
  }

  if (data.source == DataSource::Csv && data.csv_path.empty()) {
    throw ConfigError("data.csv_path", "required when data.source is csv");
  }
  if (data.source == DataSource::Blobs) {
    const std::size_t width = data.pca_k.value_or(data.blobs.n_features);
    if (data.pca_k && *data.pca_k > data.blobs.n_features) {
      throw ConfigError("data.pca_k", "exceeds data.blobs.n_features");
    }
    if (width != num_qubits) {
      throw ConfigError(data.pca_k ? "data.pca_k" : "data.blobs.n_features",
                        "feature count " + std::to_string(width) + " must equal num_qubits " +
                            std::to_string(num_qubits));
    }
    if (!data.blobs.class_weights.empty() && data.blobs.class_weights.size() != num_classes) {
      throw ConfigError("data.blobs.class_weights", "needs one weight per class");
    }
    const std::size_t max_k = *std::max_element(devices.begin(), devices.end());
    if (max_k + data.server_val_count + data.server_test_count > data.blobs.n_samples) {
      throw ConfigError("data.blobs.n_samples", "too few samples for the devices and server holdouts");
    }
  } else if (data.pca_k && *data.pca_k != num_qubits) {
    throw ConfigError("data.pca_k", "must equal num_qubits");
  }
  if (data.scaler == ScalerChoice::MinMax && !(data.scaler_lo < data.scaler_hi)) {
    throw ConfigError("data.scaler_range", "needs lo < hi");
  }
  if (data.server_val_count < 1) throw ConfigError("data.server_val_count", "must be >= 1");
  if (data.server_test_count < 1) throw ConfigError("data.server_test_count", "must be >= 1");
  if (!(data.client_train_fraction > 0.0 && data.client_train_fraction < 1.0)) {
    throw ConfigError("data.client_train_fraction", "must lie in (0, 1)");
  }
  if (output.empty()) throw ConfigError("output", "must not be empty");
}

ExperimentConfig from_json(const json& doc) {
  ObjectReader r(doc, "");
  ExperimentConfig cfg;

  std::string s = model_name(cfg.model);
  r.read("model", s);
  cfg.model = enum_from<ModelKind>("model", s, {{"vqc", ModelKind::Vqc}, {"qcnn", ModelKind::Qcnn}});
  r.read("num_qubits", cfg.num_qubits);
  r.read("num_layers", cfg.num_layers);
  r.read("num_classes", cfg.num_classes);
  if (const json* v = r.find("devices")) {
    cfg.devices.clear();
    if (v->is_array()) {
      for (const json& e : *v) cfg.devices.push_back(ObjectReader::convert<std::size_t>(e, "devices"));
    } else {
      cfg.devices.push_back(ObjectReader::convert<std::size_t>(*v, "devices"));
    }
  }
  r.read("rounds", cfg.rounds);
  if (const json* v = r.find("optimizer")) cfg.optimizer = read_optimizer(*v, "optimizer");
  if (const json* v = r.find("server_optimizer")) {
    cfg.server_optimizer = read_optimizer(*v, "server_optimizer");
  }

  if (const json* v = r.find("security")) {
    ObjectReader sr(*v, "security");
    SecurityConfig& sec = cfg.security;
    sr.read("dp_enabled", sec.dp_enabled);
    std::string mech = privacy::to_string(sec.mechanism);
    sr.read("mechanism", mech);
    sec.mechanism = enum_from<privacy::Mechanism>(
        sr.field("mechanism"), mech,
        {{"laplace", privacy::Mechanism::Laplace}, {"gaussian", privacy::Mechanism::Gaussian}});
    sr.read("epsilon", sec.epsilon);
    sr.read_optional("delta", sec.delta);
    sr.read("sensitivity", sec.sensitivity);
    sr.read("clip_nonnegative", sec.clip_nonnegative);
    sr.read_optional("decimals", sec.decimals);
    sr.read("qkd_enabled", sec.qkd_enabled);
    std::string cipher = qkd::to_string(sec.cipher);
    sr.read("cipher", cipher);
    sec.cipher = enum_from<qkd::CipherKind>(
        sr.field("cipher"), cipher,
        {{"shift256", qkd::CipherKind::Shift256}, {"xor", qkd::CipherKind::Xor}});
    sr.read("flip_probability", sec.flip_probability);
    sr.read("test_fraction", sec.test_fraction);
    sr.read("n_allowed", sec.n_allowed);
    sr.read("serialization_decimals", sec.serialization_decimals);
    sr.finish();
  }

  std::string ft = fl::to_string(cfg.ft_mode);
  r.read("ft_mode", ft);
  cfg.ft_mode = enum_from<fl::FtMode>(
      "ft_mode", ft, {{"noft", fl::FtMode::NoFt}, {"ft", fl::FtMode::Ft}, {"ftavg", fl::FtMode::FtAvg}});

  if (const json* v = r.find("data")) {
    ObjectReader dr(*v, "data");
    DataConfig& d = cfg.data;
    std::string src = source_name(d.source);
    dr.read("source", src);
    d.source = enum_from<DataSource>(dr.field("source"), src,
                                     {{"blobs", DataSource::Blobs}, {"csv", DataSource::Csv}});
    if (const json* b = dr.find("blobs")) {
      ObjectReader br(*b, "data.blobs");
      br.read("n_samples", d.blobs.n_samples);
      br.read("n_features", d.blobs.n_features);
      br.read("class_separation", d.blobs.class_separation);
      br.read("class_weights", d.blobs.class_weights);
      br.read("cluster_std", d.blobs.cluster_std);
      br.finish();
    }
    dr.read("csv_path", d.csv_path);
    std::string sc = scaler_name(d.scaler);
    dr.read("scaler", sc);
    d.scaler = enum_from<ScalerChoice>(dr.field("scaler"), sc,
                                       {{"none", ScalerChoice::None},
                                        {"standard", ScalerChoice::Standard},
                                        {"minmax", ScalerChoice::MinMax}});
    if (const json* range = dr.find("scaler_range")) {
      const auto values = ObjectReader::convert<std::vector<double>>(*range, "data.scaler_range");
      if (values.size() != 2) throw ConfigError("data.scaler_range", "expected [lo, hi]");
      d.scaler_lo = values[0];
      d.scaler_hi = values[1];
    }
    dr.read_optional("pca_k", d.pca_k);
    dr.read("balance", d.balance);
    dr.read("server_val_count", d.server_val_count);
    dr.read("server_test_count", d.server_test_count);
    dr.read("client_train_fraction", d.client_train_fraction);
    dr.finish();
  }

  r.read("root_seed", cfg.root_seed);
  r.read("threads", cfg.threads);
  r.read("output", cfg.output);
  r.finish();
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("not valid JSON: ") + e.what());
  }
  return from_json(doc);
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

json to_json(const ExperimentConfig& cfg) {
  const SecurityConfig& sec = cfg.security;
  const DataConfig& d = cfg.data;
  json security = {
      {"dp_enabled", sec.dp_enabled},
      {"mechanism", privacy::to_string(sec.mechanism)},
      {"epsilon", sec.epsilon},
      {"delta", sec.delta ? json(*sec.delta) : json(nullptr)},
      {"sensitivity", sec.sensitivity},
      {"clip_nonnegative", sec.clip_nonnegative},
      {"decimals", sec.decimals ? json(*sec.decimals) : json(nullptr)},
      {"qkd_enabled", sec.qkd_enabled},
      {"cipher", qkd::to_string(sec.cipher)},
      {"flip_probability", sec.flip_probability},
      {"test_fraction", sec.test_fraction},
      {"n_allowed", sec.n_allowed},
      {"serialization_decimals", sec.serialization_decimals},
  };
  json data = {
      {"source", source_name(d.source)},
      {"blobs",
       {{"n_samples", d.blobs.n_samples},
        {"n_features", d.blobs.n_features},
        {"class_separation", d.blobs.class_separation},
        {"class_weights", d.blobs.class_weights},
        {"cluster_std", d.blobs.cluster_std}}},
      {"csv_path", d.csv_path},
      {"scaler", scaler_name(d.scaler)},
      {"scaler_range", {d.scaler_lo, d.scaler_hi}},
      {"pca_k", d.pca_k ? json(*d.pca_k) : json(nullptr)},
      {"balance", d.balance},
      {"server_val_count", d.server_val_count},
      {"server_test_count", d.server_test_count},
      {"client_train_fraction", d.client_train_fraction},
  };
  json out = {
      {"model", model_name(cfg.model)},
      {"num_qubits", cfg.num_qubits},
      {"num_layers", cfg.num_layers},
      {"num_classes", cfg.num_classes},
      {"devices", cfg.devices.size() == 1 ? json(cfg.devices.front()) : json(cfg.devices)},
      {"rounds", cfg.rounds},
      {"optimizer", optimizer_json(cfg.optimizer)},
      {"security", security},
      {"ft_mode", fl::to_string(cfg.ft_mode)},
      {"data", data},
      {"root_seed", cfg.root_seed},
      {"threads", cfg.threads},
      {"output", cfg.output},
  };
  if (cfg.server_optimizer) out["server_optimizer"] = optimizer_json(*cfg.server_optimizer);
  return out;
}

std::vector<ExperimentConfig> expand_sweep(const ExperimentConfig& cfg) {
  if (cfg.devices.size() <= 1) return {cfg};
  std::vector<ExperimentConfig> out;
  const std::filesystem::path base(cfg.output);
  for (std::size_t k : cfg.devices) {
    ExperimentConfig one = cfg;
    one.devices = {k};
    std::filesystem::path p = base;
    p.replace_filename(base.stem().string() + "_devices" + std::to_string(k) +
                       base.extension().string());
    one.output = p.string();
    out.push_back(std::move(one));
  }
  return out;
}

std::string manifest_path(const std::string& output) {
  std::filesystem::path p(output);
  p.replace_filename(p.stem().string() + ".manifest.json");
  return p.string();
}

}  // namespace vqfl::config
