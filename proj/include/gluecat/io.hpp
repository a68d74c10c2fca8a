#pragma once

#include <string>

#include "gluecat/anodyne.hpp"
#include "gluecat/fincat.hpp"
#include "gluecat/grid.hpp"
#include "gluecat/nerve.hpp"

namespace gluecat {

// JSON interchange. Every document carries a "type" field; load(export(x))
// yields x for canonical forms.

std::string poset_to_json(const Poset& p);
Poset poset_from_json(const std::string& text);

std::string subnerve_to_json(const SubNerve& k);
SubNerve subnerve_from_json(const std::string& text);

std::string category_to_json(const FinCategory& c);
FinCategory category_from_json(const std::string& text);

std::string certificate_to_json(const AnodyneCertificate& cert);
AnodyneCertificate certificate_from_json(const std::string& text);

std::string grid_to_json(const GridSimplex& g);
GridSimplex grid_from_json(const std::string& text, FinCategoryPtr cat);

std::string sample_to_json(const BisimplexSample& s);
BisimplexSample sample_from_json(const std::string& text, FinCategoryPtr cat);

std::string report_to_json(const Report& r);

// DOT export.
std::string poset_to_dot(const Poset& p);
std::string subnerve_to_dot(const SubNerve& k);
std::string category_to_dot(const FinCategory& c);
std::string grid_to_dot(const GridSimplex& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gluecat
