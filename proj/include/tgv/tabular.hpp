#pragma once

#include "tgv/csv.hpp"
#include "tgv/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tgv {

/// One raw tabular record. Whoever ingests the data decides which attributes
/// are continuous and which categorical (the schema sidecar, or the
/// synthetic generator).
struct Record {
  std::map<std::string, double> continuous;
  std::map<std::string, std::string> categorical;
};

/// Per-attribute normalization statistics and category vocabularies, fitted
/// on training data.
struct AttributeSchema {
  std::vector<std::string> continuous_names;
  std::vector<std::pair<double, double>> continuous_stats;  // (mean, stddev)
  std::vector<std::pair<std::string, std::vector<std::string>>> categorical_specs;

  std::size_t n_continuous() const { return continuous_names.size(); }
  /// Total bipolar-encoded categorical columns: 1 for binary attributes,
  /// k for k >= 3 categories.
  std::size_t encoded_categorical_cols() const;
};

/// Encoded batch: a_cat holds -1/+1 entries, a_con holds z-scored values.
struct TabularBatch {
  Matrix a_cat;  // N x B
  Matrix a_con;  // N x M
  std::size_t n() const { return a_cat.rows() ? a_cat.rows() : a_con.rows(); }
};

enum class SimilarityKind { categorical, continuous, combined };

struct SimilarityMatrix {
  Matrix values;
  SimilarityKind kind = SimilarityKind::combined;
  std::size_t n() const { return values.rows(); }
};

/// Collect vocabularies (first-appearance order) and continuous statistics
/// (population convention) over all records. Attribute order is the sorted
/// attribute name order.
AttributeSchema fit_schema(const std::vector<Record>& records);

/// Declared dataset structure from the sidecar schema file. Vocabulary order
/// comes from the file; statistics are fitted from data.
struct SchemaSpec {
  std::string feature_prefix = "f";
  std::size_t feature_dim = 0;
  std::vector<std::string> continuous_names;
  std::vector<std::pair<std::string, std::vector<std::string>>> categorical_specs;
};

/// Fit statistics for a declared structure. Attribute and category order are
/// taken from the spec; unseen categories at encode time are an error.
AttributeSchema fit_schema(const std::vector<Record>& records, const SchemaSpec& spec);

TabularBatch encode_batch(const std::vector<Record>& records, const AttributeSchema& schema);

SimilarityMatrix categorical_similarity(const Matrix& a_cat);
SimilarityMatrix continuous_similarity(const Matrix& a_con);
SimilarityMatrix combine_similarity(const SimilarityMatrix& s_con, const SimilarityMatrix& s_cat,
                                    double lambda);

/// Combined batch similarity, handling the degenerate M = 0 / B = 0 cases:
/// with no continuous attributes lambda must be 0, with no categorical
/// attributes lambda must be 1.
SimilarityMatrix combined_similarity(const TabularBatch& batch, double lambda);

SchemaSpec read_schema_file(const std::string& path);
void write_schema_file(const std::string& path, const SchemaSpec& spec);

/// Extract typed records / feature matrix from a loaded CSV table.
std::vector<Record> records_from_table(const Table& table, const SchemaSpec& spec);
Matrix features_from_table(const Table& table, const SchemaSpec& spec);

}  // namespace tgv
