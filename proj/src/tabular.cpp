#include "tgv/tabular.hpp"

#include "tgv/errors.hpp"
#include "tgv/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace tgv {

namespace {

constexpr double kDistanceEpsilon = 1e-12;

void check_consistent_shape(const std::vector<Record>& records) {
  const auto& first = records.front();
  for (const auto& rec : records) {
    bool same = rec.continuous.size() == first.continuous.size() &&
                rec.categorical.size() == first.categorical.size();
    if (same) {
      for (const auto& [name, _] : first.continuous)
        if (!rec.continuous.count(name)) same = false;
      for (const auto& [name, _] : first.categorical)
        if (!rec.categorical.count(name)) same = false;
    }
    require(same, "UnknownShape", "records disagree on attribute sets");
  }
}

std::pair<double, double> population_stats(const std::vector<Record>& records,
                                           const std::string& name) {
  double sum = 0.0;
  for (const auto& rec : records) {
    const double v = rec.continuous.at(name);
    require(std::isfinite(v), "NonFiniteValue", "continuous attribute '" + name + "'");
    sum += v;
  }
  const double mean = sum / static_cast<double>(records.size());
  double sq = 0.0;
  for (const auto& rec : records) {
    const double d = rec.continuous.at(name) - mean;
    sq += d * d;
  }
  const double stddev = std::sqrt(sq / static_cast<double>(records.size()));
  require(stddev > 0.0, "ConstantAttribute",
          "continuous attribute '" + name + "' has zero variance");
  return {mean, stddev};
}

}  // namespace

std::size_t AttributeSchema::encoded_categorical_cols() const {
  std::size_t b = 0;
  for (const auto& [_, vocab] : categorical_specs) b += vocab.size() == 2 ? 1 : vocab.size();
  return b;
}

AttributeSchema fit_schema(const std::vector<Record>& records) {
  require(records.size() >= 2, "InsufficientData",
          "need at least 2 records, got " + std::to_string(records.size()));
  check_consistent_shape(records);

  AttributeSchema schema;
  for (const auto& [name, _] : records.front().continuous) schema.continuous_names.push_back(name);
  for (const auto& name : schema.continuous_names)
    schema.continuous_stats.push_back(population_stats(records, name));

  for (const auto& [name, _] : records.front().categorical) {
    std::vector<std::string> vocab;
    for (const auto& rec : records) {
      const auto& value = rec.categorical.at(name);
      if (std::find(vocab.begin(), vocab.end(), value) == vocab.end()) vocab.push_back(value);
    }
    require(!vocab.empty(), "UnknownShape", "categorical attribute '" + name + "' is empty");
    schema.categorical_specs.emplace_back(name, std::move(vocab));
  }
  return schema;
}

AttributeSchema fit_schema(const std::vector<Record>& records, const SchemaSpec& spec) {
  require(records.size() >= 2, "InsufficientData",
          "need at least 2 records, got " + std::to_string(records.size()));
  check_consistent_shape(records);

  AttributeSchema schema;
  schema.continuous_names = spec.continuous_names;
  for (const auto& name : schema.continuous_names)
    schema.continuous_stats.push_back(population_stats(records, name));
  for (const auto& [name, vocab] : spec.categorical_specs) {
    require(!vocab.empty(), "UnknownShape", "declared vocabulary for '" + name + "' is empty");
    std::set<std::string> seen(vocab.begin(), vocab.end());
    require(seen.size() == vocab.size(), "UnknownShape",
            "declared vocabulary for '" + name + "' has duplicates");
    schema.categorical_specs.emplace_back(name, vocab);
  }
  return schema;
}

TabularBatch encode_batch(const std::vector<Record>& records, const AttributeSchema& schema) {
  const std::size_t n = records.size();
  const std::size_t m = schema.n_continuous();
  const std::size_t b = schema.encoded_categorical_cols();

  TabularBatch batch;
  batch.a_con = Matrix(n, m);
  batch.a_cat = Matrix(n, b);

  for (std::size_t i = 0; i < n; ++i) {
    const auto& rec = records[i];
    for (std::size_t j = 0; j < m; ++j) {
      const auto& name = schema.continuous_names[j];
      auto it = rec.continuous.find(name);
      require(it != rec.continuous.end(), "UnknownShape",
              "record missing continuous attribute '" + name + "'");
      require(std::isfinite(it->second), "NonFiniteValue",
              "continuous attribute '" + name + "'");
      const auto [mean, stddev] = schema.continuous_stats[j];
      batch.a_con(i, j) = (it->second - mean) / stddev;
    }
    std::size_t col = 0;
    for (const auto& [name, vocab] : schema.categorical_specs) {
      auto it = rec.categorical.find(name);
      require(it != rec.categorical.end(), "UnknownShape",
              "record missing categorical attribute '" + name + "'");
      auto pos = std::find(vocab.begin(), vocab.end(), it->second);
      require(pos != vocab.end(), "UnknownCategory",
              "attribute '" + name + "': unknown category '" + it->second + "'");
      const std::size_t active = static_cast<std::size_t>(pos - vocab.begin());
      if (vocab.size() == 2) {
        batch.a_cat(i, col) = active == 0 ? 1.0 : -1.0;
        col += 1;
      } else {
        for (std::size_t k = 0; k < vocab.size(); ++k)
          batch.a_cat(i, col + k) = k == active ? 1.0 : -1.0;
        col += vocab.size();
      }
    }
  }
  return batch;
}

SimilarityMatrix categorical_similarity(const Matrix& a_cat) {
  require(a_cat.rows() >= 2, "InsufficientData", "similarity needs N >= 2");
  require(a_cat.cols() >= 1, "ShapeMismatch", "categorical similarity needs B >= 1");
  for (std::size_t i = 0; i < a_cat.size(); ++i) {
    const double v = a_cat.data()[i];
    require(v == 1.0 || v == -1.0, "InvalidBatch", "a_cat entries must be -1 or +1");
  }
  return {kernels::cosine_similarity(a_cat), SimilarityKind::categorical};
}

SimilarityMatrix continuous_similarity(const Matrix& a_con) {
  require(a_con.rows() >= 2, "InsufficientData", "similarity needs N >= 2");
  require(a_con.cols() >= 1, "ShapeMismatch", "continuous similarity needs M >= 1");
  for (std::size_t i = 0; i < a_con.size(); ++i)
    require(std::isfinite(a_con.data()[i]), "NonFiniteValue", "a_con entries must be finite");

  const Matrix dist = kernels::pairwise_distances(a_con);
  double max_dist = 0.0;
  for (std::size_t i = 0; i < dist.rows(); ++i)
    for (std::size_t j = 0; j < dist.cols(); ++j) max_dist = std::max(max_dist, dist(i, j));

  const std::size_t n = a_con.rows();
  SimilarityMatrix s{Matrix(n, n), SimilarityKind::continuous};
  const double scale = 2.0 / (max_dist + kDistanceEpsilon);
  for (std::size_t i = 0; i < n; ++i) {
    s.values(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 1.0 - scale * dist(i, j);
      s.values(i, j) = v;
      s.values(j, i) = v;
    }
  }
  return s;
}

SimilarityMatrix combine_similarity(const SimilarityMatrix& s_con, const SimilarityMatrix& s_cat,
                                    double lambda) {
  require(lambda >= 0.0 && lambda <= 1.0, "LambdaOutOfRange",
          "lambda must lie in [0, 1], got " + std::to_string(lambda));
  require(s_con.values.same_shape(s_cat.values), "ShapeMismatch",
          "similarity matrices differ in shape");
  SimilarityMatrix s{Matrix(s_con.n(), s_con.n()), SimilarityKind::combined};
  for (std::size_t i = 0; i < s.values.size(); ++i)
    s.values.data()[i] = lambda * s_con.values.data()[i] + (1.0 - lambda) * s_cat.values.data()[i];
  return s;
}

SimilarityMatrix combined_similarity(const TabularBatch& batch, double lambda) {
  const std::size_t m = batch.a_con.cols();
  const std::size_t b = batch.a_cat.cols();
  require(m > 0 || b > 0, "InvalidConfig", "batch has no attributes");
  if (m == 0) {
    require(lambda == 0.0, "LambdaOutOfRange", "no continuous attributes: lambda must be 0");
    SimilarityMatrix s = categorical_similarity(batch.a_cat);
    s.kind = SimilarityKind::combined;
    return s;
  }
  if (b == 0) {
    require(lambda == 1.0, "LambdaOutOfRange", "no categorical attributes: lambda must be 1");
    SimilarityMatrix s = continuous_similarity(batch.a_con);
    s.kind = SimilarityKind::combined;
    return s;
  }
  return combine_similarity(continuous_similarity(batch.a_con),
                            categorical_similarity(batch.a_cat), lambda);
}

SchemaSpec read_schema_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "IoError", "cannot open schema '" + path + "'");
  SchemaSpec spec;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string kind;
    ss >> kind;
    if (kind == "features") {
      ss >> spec.feature_prefix >> spec.feature_dim;
      require(!ss.fail(), "IoError", "schema: bad features line '" + line + "'");
    } else if (kind == "continuous") {
      std::string name;
      ss >> name;
      require(!ss.fail(), "IoError", "schema: bad continuous line '" + line + "'");
      spec.continuous_names.push_back(name);
    } else if (kind == "categorical") {
      std::string name;
      ss >> name;
      require(!ss.fail(), "IoError", "schema: bad categorical line '" + line + "'");
      std::vector<std::string> vocab;
      std::string cat;
      while (ss >> cat) vocab.push_back(cat);
      require(!vocab.empty(), "IoError", "schema: categorical '" + name + "' has no categories");
      spec.categorical_specs.emplace_back(name, std::move(vocab));
    } else {
      fail("IoError", "schema: unknown line kind '" + kind + "'");
    }
  }
  return spec;
}

void write_schema_file(const std::string& path, const SchemaSpec& spec) {
  std::ofstream out(path, std::ios::trunc);
  require(out.good(), "IoError", "cannot write schema '" + path + "'");
  out << "# TGV schema v1\n";
  if (spec.feature_dim > 0)
    out << "features " << spec.feature_prefix << ' ' << spec.feature_dim << '\n';
  for (const auto& name : spec.continuous_names) out << "continuous " << name << '\n';
  for (const auto& [name, vocab] : spec.categorical_specs) {
    out << "categorical " << name;
    for (const auto& cat : vocab) out << ' ' << cat;
    out << '\n';
  }
  require(out.good(), "IoError", "failed writing schema '" + path + "'");
}

std::vector<Record> records_from_table(const Table& table, const SchemaSpec& spec) {
  std::vector<std::size_t> con_idx, cat_idx;
  for (const auto& name : spec.continuous_names) con_idx.push_back(table.column_index(name));
  for (const auto& [name, _] : spec.categorical_specs) cat_idx.push_back(table.column_index(name));

  std::vector<Record> records(table.n_rows());
  for (std::size_t i = 0; i < table.n_rows(); ++i) {
    for (std::size_t j = 0; j < con_idx.size(); ++j) {
      const auto& cell = table.rows[i][con_idx[j]];
      try {
        records[i].continuous[spec.continuous_names[j]] = std::stod(cell);
      } catch (const std::exception&) {
        fail("NonFiniteValue",
             "column '" + spec.continuous_names[j] + "': cannot parse '" + cell + "'");
      }
    }
    for (std::size_t j = 0; j < cat_idx.size(); ++j)
      records[i].categorical[spec.categorical_specs[j].first] = table.rows[i][cat_idx[j]];
  }
  return records;
}

Matrix features_from_table(const Table& table, const SchemaSpec& spec) {
  require(spec.feature_dim > 0, "InvalidConfig", "schema declares no feature columns");
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < spec.feature_dim; ++j)
    idx.push_back(table.column_index(spec.feature_prefix + std::to_string(j)));
  Matrix x(table.n_rows(), spec.feature_dim);
  for (std::size_t i = 0; i < table.n_rows(); ++i)
    for (std::size_t j = 0; j < spec.feature_dim; ++j) {
      const auto& cell = table.rows[i][idx[j]];
      try {
        x(i, j) = std::stod(cell);
      } catch (const std::exception&) {
        fail("NonFiniteValue", "feature cell '" + cell + "' is not numeric");
      }
      require(std::isfinite(x(i, j)), "NonFiniteValue", "non-finite feature value");
    }
  return x;
}

}  // namespace tgv
