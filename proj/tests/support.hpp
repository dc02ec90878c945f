#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "mds/corpus.hpp"
#include "mds/io.hpp"
#include "mds/text_pipeline.hpp"

namespace testing {

inline const std::filesystem::path kFixtures = MDS_FIXTURE_DIR;
inline const std::filesystem::path kData = MDS_DATA_DIR;
inline const std::filesystem::path kGolden = MDS_GOLDEN_DIR;

// The six sentences of the Brazil example, one per entry.
inline const char* const kBrazil[] = {
    "Brazil is the largest country in South America.",
    "It is the world's fifth-largest country by both area and population.",
    "It is the largest country to have Portuguese as an official language and the only one in America.",
    "Bounded by the Atlantic Ocean on the east, Brazil has a coastline of 7,491 kilometers.",
    "It borders all other South American countries except Ecuador and Chile.",
    "Brazil's economy is the world's ninth-largest by nominal GDP of 2015.",
};

inline const mds::PipelineResources& english() {
  static const mds::PipelineResources r = mds::PipelineResources::load(mds::ResourcePaths::defaults("en", kData));
  return r;
}

inline const mds::PipelineResources& portuguese() {
  static const mds::PipelineResources r = mds::PipelineResources::load(mds::ResourcePaths::defaults("pt", kData));
  return r;
}

inline mds::Sentence sentence(std::string text, std::size_t index = 0, std::string doc = "d") {
  return {std::move(doc), index, text, mds::count_words(text)};
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    path_ = std::filesystem::temp_directory_path() /
            ("mds-test-" + std::to_string(stamp) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  void write(const std::filesystem::path& rel, const std::string& text) const {
    std::filesystem::create_directories((path_ / rel).parent_path());
    std::ofstream(path_ / rel, std::ios::binary) << text;
  }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace testing
