#pragma once

#include <string_view>

// Contents of the files under data/, embedded at build time.
namespace panast::bundled {

std::string_view lexicon_tsv();
std::string_view stopwords_txt();
std::string_view baseline_tsv();
std::string_view events_table4();

}  // namespace panast::bundled
