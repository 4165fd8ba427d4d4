#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "schur/fp.hpp"

namespace schur {

/// Positive definite integral binary quadratic form a x^2 + b xy + c y^2
/// with discriminant b^2 - 4ac < 0 and a > 0.
struct QuadForm {
  long long a = 1, b = 0, c = 0;

  long long discriminant() const { return b * b - 4 * a * c; }
  bool is_reduced() const {
    return -a < b && b <= a && a <= c && (b >= 0 || (a != c && b != a));
  }
  QuadForm inverse() const { return QuadForm{a, -b, c}; }
  bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const QuadForm& o) const {
    return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
  }
};

bool is_fundamental_discriminant(long long d);

QuadForm principal_form(long long d);

/// SL_2(Z)-reduction of a positive definite form.
QuadForm reduce(QuadForm f);

/// Dirichlet composition of two forms of the same discriminant, reduced.
/// Throws std::invalid_argument on a discriminant mismatch.
QuadForm compose(const QuadForm& f, const QuadForm& g);

/// All reduced forms of the given negative fundamental discriminant; the
/// count is the class number h(d).  Throws std::invalid_argument for
/// non-fundamental or non-negative d.
std::vector<QuadForm> reduced_forms(long long d);

/// The form class group of a negative fundamental discriminant.
class FormClassGroup {
 public:
  explicit FormClassGroup(long long d);

  long long discriminant() const { return d_; }
  std::uint64_t class_number() const { return forms_.size(); }
  const std::vector<QuadForm>& forms() const { return forms_; }

  std::size_t index_of(const QuadForm& reduced) const;
  std::size_t compose_idx(std::size_t i, std::size_t j) const;
  std::size_t power_idx(std::size_t i, std::uint64_t e) const;
  std::size_t identity_idx() const { return id_; }

  /// Partition (nu_1 >= nu_2 >= ...) of the p-Sylow subgroup, recovered from
  /// the counts of elements of order dividing p^k.
  std::vector<unsigned> p_sylow_type(std::uint32_t p) const;

 private:
  long long d_;
  std::vector<QuadForm> forms_;  // sorted
  std::size_t id_;
};

/// |Aut(A)| for the finite abelian p-group of type (nu_1 >= nu_2 >= ...)
/// by the standard closed-form count.
Int abelian_p_aut_order(std::uint32_t p, const std::vector<unsigned>& partition);

struct SurveyOptions {
  std::uint32_t p = 3;
  long long bound = 1'000'000;    // consider -bound < d < 0
  bool include_p_dividing = true; // keep discriminants with p | d
  long long residue = 0;          // optional congruence filter: d = residue mod modulus
  long long modulus = 0;          // 0 = no congruence filter
  unsigned workers = 1;
};

struct SurveyTypeRecord {
  std::vector<unsigned> partition;
  std::uint64_t count = 0;
  double frequency = 0;
  double prediction = 0;  // C_inf / |Aut(A)|
};

struct SurveyReport {
  SurveyOptions options;
  std::uint64_t discriminants = 0;
  std::vector<SurveyTypeRecord> types;  // sorted by partition
  double c_inf = 0;

  std::string to_csv_header() const;
};

/// Tally p-Sylow types of form class groups over all fundamental
/// discriminants -bound < d < 0 passing the filters, with the closed-form
/// predictions attached.
SurveyReport survey(const SurveyOptions& options);

/// Per-discriminant CSV rows: discriminant, class number, partition.
struct SurveyRow {
  long long d = 0;
  std::uint64_t h = 0;
  std::vector<unsigned> partition;
};
std::vector<SurveyRow> survey_rows(const SurveyOptions& options);

std::string partition_str(const std::vector<unsigned>& partition);

}  // namespace schur
