# Local-Group Workbench Package
