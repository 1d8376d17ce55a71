package logcollector

import (
	"fmt"
	"os"
	"path/filepath"
)

type RotationPolicy struct {
	MaxBytes     int64
	KeepArchives int
}

func RotateIfNeeded(path string, policy RotationPolicy) error {
	info, err := os.Stat(path)
	if err != nil {
		return err
	}
	if info.Size() < policy.MaxBytes {
		return nil
	}
	for archive := policy.KeepArchives - 1; archive >= 1; archive-- {
		older := archiveName(path, archive)
		newer := archiveName(path, archive+1)
		if _, statErr := os.Stat(older); statErr == nil {
			if renameErr := os.Rename(older, newer); renameErr != nil {
				return renameErr
			}
		}
	}
	return os.Rename(path, archiveName(path, 1))
}

func archiveName(path string, index int) string {
	return filepath.Join(filepath.Dir(path),
		fmt.Sprintf("%s.%d", filepath.Base(path), index))
}
